#include <doctest.h>

#include <cmath>

#include "polar/channel.hpp"
#include "polar/construction.hpp"

using namespace polar;

TEST_CASE("BEC Bhattacharyya recursion, exact values") {
  {
    const ReliabilityVector r = bec_reliabilities(1, 0.5);
    CHECK(r.values == std::vector<double>{0.75, 0.25});
  }
  {
    const ReliabilityVector r = bec_reliabilities(2, 0.5);
    CHECK(r.values == std::vector<double>{0.9375, 0.5625, 0.4375, 0.0625});
  }
  for (unsigned n : {1u, 3u, 5u}) {
    for (double v : bec_reliabilities(n, 0.0).values) CHECK(v == 0.0);
    for (double v : bec_reliabilities(n, 1.0).values) CHECK(v == 1.0);
  }
  CHECK_THROWS_AS(bec_reliabilities(2, 1.5), ConfigError);
}

TEST_CASE("BEC recursion conserves the Bhattacharyya sum") {
  for (double eps : {0.1, 0.37, 0.5, 0.9}) {
    for (unsigned n : {1u, 2u, 4u, 6u}) {
      const ReliabilityVector r = bec_reliabilities(n, eps);
      double sum = 0.0;
      for (double v : r.values) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        sum += v;
      }
      // Z- + Z+ = 2z at every split, so the total is N * eps.
      CHECK(sum == doctest::Approx(double(std::size_t{1} << n) * eps));
    }
  }
}

TEST_CASE("Gaussian-approximation density evolution basics") {
  const double sigma2 = ebn0_to_sigma2(1.7, 0.5);
  const double m0 = 2.0 / sigma2;
  {
    const ReliabilityVector r = bawgn_reliabilities(0, 1.7, 0.5);
    REQUIRE(r.values.size() == 1);
    CHECK(r.values[0] == doctest::Approx(m0));
  }
  {
    const ReliabilityVector r = bawgn_reliabilities(1, 1.7, 0.5);
    REQUIRE(r.values.size() == 2);
    CHECK(r.values[1] == doctest::Approx(2.0 * m0));  // variable-node doubling
    CHECK(r.values[0] < r.values[1]);
  }
}

TEST_CASE("phi-function inverse round-trips on both branches") {
  for (double x : {0.05, 0.5, 3.0, 9.0, 11.0, 40.0, 200.0}) {
    const double y = ga_phi_log(x);
    CHECK(ga_phi_inv_log(y) == doctest::Approx(x).epsilon(1e-6));
  }
  // phi decreases in x, so its log does too
  CHECK(ga_phi_log(1.0) > ga_phi_log(2.0));
  CHECK(ga_phi_log(15.0) > ga_phi_log(30.0));
}

TEST_CASE("polarization endpoints are extremal for any design") {
  std::vector<DesignSpec> specs;
  specs.push_back({ChannelKind::BEC, 0.5, 0.5});
  specs.push_back({ChannelKind::BEC, 0.2, 0.5});
  specs.push_back({ChannelKind::BAWGN, 2.0, 0.5});
  specs.push_back({ChannelKind::BAWGN, 0.0, 0.75});
  for (const DesignSpec& spec : specs) {
    for (unsigned n : {2u, 4u, 6u}) {
      const ReliabilityVector r = compute_reliabilities(n, spec);
      const std::size_t last = r.values.size() - 1;
      for (std::size_t i = 1; i <= last; ++i) {
        CHECK(!r.worse(i, 0));  // index 0 is never more reliable than any
        CHECK(!r.worse(last, i < last ? i : 0));
      }
    }
  }
}

TEST_CASE("design ranking at N=4, 2 dB: index 0 worst, index 3 best") {
  const ReliabilityVector r = bawgn_reliabilities(2, 2.0, 0.5);
  for (std::size_t i : {1u, 2u, 3u}) CHECK(r.worse(0, i));
  for (std::size_t i : {0u, 1u, 2u}) CHECK(r.worse(i, 3));
}

TEST_CASE("build_code selects the worst channels as frozen") {
  DesignSpec bec{ChannelKind::BEC, 0.5, 0.5};
  CHECK(build_code(4, 2, 0, bec).frozen_set ==
        std::vector<std::size_t>{0, 1});
  CHECK(build_code(8, 8, 0, bec).frozen_set.empty());
  const PolarCode allfrozen = build_code(8, 0, 0, bec);
  CHECK(allfrozen.frozen_set.size() == 8);
  CHECK_THROWS_AS(build_code(8, 8, 1, bec), ConfigError);

  // determinism
  const PolarCode a = build_code(256, 128, 8, {ChannelKind::BAWGN, 2.0, 0.5});
  const PolarCode b = build_code(256, 128, 8, {ChannelKind::BAWGN, 2.0, 0.5});
  CHECK(a.frozen_set == b.frozen_set);
  CHECK(a.frozen_set.size() == 256 - 128 - 8);
}

TEST_CASE("BEC frozen set is self-consistent with rational arithmetic") {
  // Re-run the doubling recursion with exact dyadic rationals at eps = 1/2:
  // values are k / 2^(2^n) scaled integers; n <= 4 keeps them in uint64.
  for (unsigned n : {1u, 2u, 3u, 4u}) {
    const std::size_t size = std::size_t{1} << n;
    // track numerators with denominator 2^width, width doubles per stage
    std::vector<unsigned long long> num{1};
    unsigned width = 1;  // eps = 1/2
    for (unsigned stage = 0; stage < n; ++stage) {
      std::vector<unsigned long long> next(num.size() * 2);
      const unsigned long long den = 1ull << width;
      for (std::size_t i = 0; i < num.size(); ++i) {
        next[2 * i] = 2 * num[i] * den - num[i] * num[i];  // 2z - z^2
        next[2 * i + 1] = num[i] * num[i];                 // z^2
      }
      num = std::move(next);
      width *= 2;
      REQUIRE(width <= 32);
    }
    const ReliabilityVector r = bec_reliabilities(n, 0.5);
    const double den = std::pow(2.0, double(width));
    for (std::size_t i = 0; i < size; ++i)
      CHECK(r.values[i] == doctest::Approx(double(num[i]) / den).epsilon(1e-12));
  }
}
