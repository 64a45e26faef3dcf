#ifndef POLAR_CRC_HPP
#define POLAR_CRC_HPP

#include <cstdint>
#include <vector>

#include "polar/code.hpp"

namespace polar {

/// Generator polynomial of degree `length`, stored with the leading
/// coefficient included (bit `length` is always set). length == 0 means
/// "no CRC" and always passes.
struct CrcSpec {
  unsigned length = 0;
  std::uint32_t polynomial = 0;  // (length+1)-bit value, MSB = x^length
  std::uint32_t initial = 0;     // initial register value, default 0

  void validate() const;
};

/// Published generator polynomial for each length in 1..16 (parity, ITU,
/// USB, MMC, CCITT, ATM, 5G NR, BBC, DARC, CAN families).
CrcSpec standard_crc(unsigned length);

/// Remainder of data * x^length modulo the generator, bit-serial division.
BitVector crc_compute(const CrcSpec& spec, const BitVector& data);

/// True iff the trailing `length` bits equal the CRC of the preceding bits.
bool crc_check(const CrcSpec& spec, const BitVector& data_with_crc);

struct ReliabilityVector;  // construction.hpp

/// One partition of the PSCL layout: a contiguous index range [begin, end),
/// its information carriers and CRC carriers (both in increasing index
/// order) and the CRC in use.
struct PartitionLayout {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::vector<std::size_t> info_positions;
  std::vector<std::size_t> crc_positions;
  CrcSpec crc_spec;
};

struct PartitionPlan {
  std::size_t p_count = 1;
  std::vector<PartitionLayout> partitions;

  std::size_t total_info() const;
  std::size_t total_crc() const;
  void validate_against(const PolarCode& code) const;
};

/// Lays out P partitions over the code. Within partition p the non-frozen
/// positions number k_p + c_p; the last c_p of them in index order carry the
/// CRC and the first k_p carry information bits. Generator polynomials come
/// from standard_crc unless overridden.
PartitionPlan build_partition_plan(
    const PolarCode& code, std::size_t p_count,
    const std::vector<unsigned>& crc_lengths,
    const std::vector<CrcSpec>* custom_specs = nullptr);

/// P = 1, no CRC: every non-frozen position is an information carrier.
PartitionPlan trivial_plan(const PolarCode& code);

}  // namespace polar

#endif
