#ifndef POLAR_CODE_HPP
#define POLAR_CODE_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace polar {

using Bit = std::uint8_t;
using BitVector = std::vector<Bit>;
using LlrVector = std::vector<double>;

/// Thrown when a user-supplied configuration is inconsistent.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ChannelKind { BAWGN, BEC };

struct DesignSpec {
  ChannelKind channel_kind = ChannelKind::BAWGN;
  double design_param = 0.0;       // Eb/N0 in dB (BAWGN) or epsilon (BEC)
  double rate_for_conversion = 0;  // (K+C)/N, used for the dB -> sigma^2 map
};

/// Code description: block length, frozen set and the design that produced it.
/// Frozen bits are fixed to 0. Indices are in natural order 0..N-1; the
/// bit-reversal permutation is applied inside encode().
struct PolarCode {
  std::size_t n_bits = 0;          // N, power of two
  std::size_t n_info = 0;          // K, information bits (CRC excluded)
  std::size_t crc_budget = 0;      // C, total CRC bits
  std::vector<std::size_t> frozen_set;  // strictly increasing, |F| = N-K-C
  DesignSpec design_meta;

  std::size_t stages() const;                   // log2 N
  bool is_frozen(std::size_t index) const;      // membership in frozen_set
  std::vector<Bit> frozen_mask() const;         // 1 at frozen positions
  std::vector<std::size_t> open_positions() const;  // non-frozen, increasing

  void validate() const;  // throws ConfigError on broken invariants
};

std::size_t bit_reverse_permutation(std::size_t index, unsigned n);

/// x = u * B_N * G^{(x)n} over GF(2), computed with the in-place butterfly.
BitVector encode(const PolarCode& code, const BitVector& u);

/// Same transform without the bit-reversal permutation; self-inverse.
BitVector polar_transform(BitVector u);

struct PartitionPlan;  // defined in crc.hpp

/// Places payload (and per-partition CRC remainders) into the length-N input
/// vector; frozen positions are 0.
BitVector message_to_input_vector(const PolarCode& code,
                                  const PartitionPlan& plan,
                                  const BitVector& payload);

/// Code-spec file: header "N=<int> K=<int> C=<int>", then one line of
/// space-separated frozen indices in increasing order.
void write_code_spec(std::ostream& os, const PolarCode& code);
PolarCode read_code_spec(std::istream& is);
PolarCode read_code_spec_file(const std::string& path);
void write_code_spec_file(const std::string& path, const PolarCode& code);

}  // namespace polar

#endif
