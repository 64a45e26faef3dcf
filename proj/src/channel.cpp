#include "polar/channel.hpp"

#include <cmath>

namespace polar {

double ebn0_to_sigma2(double ebn0_db, double rate) {
  if (rate <= 0.0 || rate > 1.0)
    throw ConfigError("ebn0_to_sigma2: rate must be in (0, 1]");
  return 1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

FrameRng::FrameRng(std::uint64_t seed, std::uint64_t frame_index)
    : gen_(splitmix64(splitmix64(seed) ^ splitmix64(frame_index + 1))) {}

double FrameRng::uniform01() {
  // 53-bit mantissa; map 0 to the smallest positive value so log() is safe.
  const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  return u > 0.0 ? u : 0x1.0p-53;
}

double FrameRng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform01()));
  const double theta = 2.0 * M_PI * uniform01();
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

BitVector FrameRng::bits(std::size_t count) {
  BitVector out(count);
  std::uint64_t word = 0;
  unsigned left = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (left == 0) {
      word = gen_();
      left = 64;
    }
    out[i] = static_cast<Bit>(word & 1u);
    word >>= 1;
    --left;
  }
  return out;
}

LlrVector transmit(const ChannelModel& model, const BitVector& x,
                   FrameRng& rng) {
  LlrVector llr(x.size());
  if (model.kind == ChannelKind::BAWGN) {
    const double s2 = model.sigma2();
    const double sigma = std::sqrt(s2);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double sym = 1.0 - 2.0 * x[i];
      llr[i] = 2.0 * (sym + sigma * rng.gaussian()) / s2;
    }
  } else {
    if (model.epsilon < 0.0 || model.epsilon > 1.0)
      throw ConfigError("BEC erasure probability must be in [0, 1]");
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (rng.uniform01() <= model.epsilon)
        llr[i] = 0.0;
      else
        llr[i] = x[i] ? -kBecLlr : kBecLlr;
    }
  }
  return llr;
}

LlrVector transmit_with_noise(const ChannelModel& model, const BitVector& x,
                              const std::vector<double>& noise) {
  if (model.kind != ChannelKind::BAWGN)
    throw ConfigError("transmit_with_noise: BAWGN only");
  if (noise.size() != x.size())
    throw std::invalid_argument("transmit_with_noise: noise length mismatch");
  const double s2 = model.sigma2();
  LlrVector llr(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    llr[i] = 2.0 * ((1.0 - 2.0 * x[i]) + noise[i]) / s2;
  return llr;
}

}  // namespace polar
