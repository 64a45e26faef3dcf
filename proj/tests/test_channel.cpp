#include <doctest.h>

#include <cmath>

#include "polar/channel.hpp"

using namespace polar;

TEST_CASE("Eb/N0 to noise variance") {
  CHECK(ebn0_to_sigma2(0.0, 0.5) == doctest::Approx(1.0));
  CHECK(ebn0_to_sigma2(3.0103, 0.5) == doctest::Approx(0.5).epsilon(1e-4));
  CHECK(ebn0_to_sigma2(0.0, 1.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(ebn0_to_sigma2(0.0, 0.0), ConfigError);
  CHECK_THROWS_AS(ebn0_to_sigma2(0.0, -1.0), ConfigError);
}

TEST_CASE("BEC transmission at the erasure extremes") {
  ChannelModel model;
  model.kind = ChannelKind::BEC;

  model.epsilon = 0.0;
  FrameRng rng(1, 0);
  CHECK(transmit(model, {0, 1}, rng) == LlrVector{kBecLlr, -kBecLlr});

  model.epsilon = 1.0;
  FrameRng rng2(1, 0);
  CHECK(transmit(model, {0, 1, 1, 0}, rng2) == LlrVector{0, 0, 0, 0});
}

TEST_CASE("BAWGN with injected zero noise gives 2(1-2x)/sigma^2") {
  ChannelModel model;
  model.kind = ChannelKind::BAWGN;
  model.ebn0_db = 0.0;
  model.rate = 0.5;  // sigma^2 = 1
  const LlrVector llr = transmit_with_noise(model, {0, 1}, {0.0, 0.0});
  CHECK(llr[0] == doctest::Approx(2.0));
  CHECK(llr[1] == doctest::Approx(-2.0));
}

TEST_CASE("per-frame RNG streams are reproducible and distinct") {
  FrameRng a(99, 5), b(99, 5), c(99, 6), d(100, 5);
  bool all_eq_c = true, all_eq_d = true;
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t va = a.next_u64();
    CHECK(va == b.next_u64());
    all_eq_c = all_eq_c && va == c.next_u64();
    all_eq_d = all_eq_d && va == d.next_u64();
  }
  CHECK(!all_eq_c);
  CHECK(!all_eq_d);
}

TEST_CASE("uniform01 lies in (0, 1] and erasure rate matches epsilon") {
  FrameRng rng(3, 0);
  const int draws = 100'000;
  const double eps = 0.3;
  int erased = 0;
  for (int i = 0; i < draws; ++i) {
    const double u = rng.uniform01();
    CHECK(u > 0.0);
    CHECK(u <= 1.0);
    if (u <= eps) ++erased;
  }
  const double fraction = double(erased) / draws;
  const double sigma = std::sqrt(eps * (1 - eps) / draws);
  CHECK(std::fabs(fraction - eps) < 3 * sigma);
}

TEST_CASE("gaussian draws have roughly standard moments") {
  FrameRng rng(17, 2);
  const int draws = 200'000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double g = rng.gaussian();
    sum += g;
    sum2 += g * g;
  }
  const double mean = sum / draws;
  const double var = sum2 / draws - mean * mean;
  CHECK(std::fabs(mean) < 0.01);
  CHECK(var == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("random payload bits are balanced and reproducible") {
  FrameRng a(5, 7), b(5, 7);
  const BitVector bits = a.bits(4096);
  CHECK(bits == b.bits(4096));
  int ones = 0;
  for (Bit v : bits) ones += v;
  CHECK(ones > 1850);
  CHECK(ones < 2250);
}
