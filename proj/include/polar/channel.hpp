#ifndef POLAR_CHANNEL_HPP
#define POLAR_CHANNEL_HPP

#include <cstdint>
#include <random>

#include "polar/code.hpp"

namespace polar {

/// BEC LLR sentinel: large enough to dominate any metric, small enough that
/// sums along the decoding tree stay finite. A perfectly cancelling pair
/// (+inf) + (-inf) comes out as exactly 0, i.e. behaves like an erasure.
inline constexpr double kBecLlr = 1e30;

double ebn0_to_sigma2(double ebn0_db, double rate);

struct ChannelModel {
  ChannelKind kind = ChannelKind::BAWGN;
  double ebn0_db = 0.0;   // BAWGN
  double epsilon = 0.0;   // BEC
  double rate = 0.5;      // code rate used in the Eb/N0 -> sigma^2 map
  std::uint64_t rng_seed = 0;

  double sigma2() const { return ebn0_to_sigma2(ebn0_db, rate); }
};

std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic per-frame random stream. Frame i always produces the same
/// draws regardless of which worker runs it, so parallel and serial Monte
/// Carlo are bit-identical. Gaussians come from an explicit Box-Muller
/// transform (std::normal_distribution is not pinned by the standard).
class FrameRng {
 public:
  FrameRng(std::uint64_t seed, std::uint64_t frame_index);

  std::uint64_t next_u64() { return gen_(); }
  double uniform01();        // in (0, 1]
  double gaussian();         // standard normal
  Bit bit() { return static_cast<Bit>(gen_() >> 63); }
  BitVector bits(std::size_t count);

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// BPSK map s = 1 - 2x, then BAWGN llr = 2(s + noise)/sigma^2 or BEC
/// llr in {+-kBecLlr, 0}.
LlrVector transmit(const ChannelModel& model, const BitVector& x,
                   FrameRng& rng);

/// Test hook: BAWGN transmission with caller-supplied noise samples.
LlrVector transmit_with_noise(const ChannelModel& model, const BitVector& x,
                              const std::vector<double>& noise);

}  // namespace polar

#endif
