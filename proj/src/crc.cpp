#include "polar/crc.hpp"

#include <array>
#include <string>

namespace polar {

void CrcSpec::validate() const {
  if (length > 16) throw ConfigError("CRC length > 16 not supported");
  if (length == 0) return;
  if ((polynomial >> length) != 1u)
    throw ConfigError("CRC polynomial must have degree = length");
  if (initial >> length)
    throw ConfigError("CRC initial value wider than register");
}

CrcSpec standard_crc(unsigned length) {
  // Leading coefficient included. Sources: parity, CRC-2, CRC-3/GSM,
  // CRC-4/ITU, CRC-5/USB, CRC-6/ITU, CRC-7/MMC, CRC-8/CCITT, x^9+x^4+1
  // (primitive), CRC-10/ATM, CRC-11 (5G NR), CRC-12 (telecom),
  // CRC-13/BBC, CRC-14/DARC, CRC-15/CAN, CRC-16/CCITT.
  static constexpr std::array<std::uint32_t, 17> kTable = {
      0x0,     0x3,    0x7,    0xB,    0x13,   0x25,   0x43,    0x89,
      0x107,   0x211,  0x633,  0xE21,  0x180F, 0x3CF5, 0x4805,  0xC599,
      0x11021};
  if (length > 16) throw ConfigError("no standard CRC of length > 16");
  CrcSpec spec;
  spec.length = length;
  spec.polynomial = kTable[length];
  spec.initial = 0;
  return spec;
}

BitVector crc_compute(const CrcSpec& spec, const BitVector& data) {
  spec.validate();
  if (spec.length == 0) return {};
  std::uint32_t reg = spec.initial;
  const std::uint32_t top = 1u << (spec.length - 1);
  const std::uint32_t mask = (1u << spec.length) - 1;
  const std::uint32_t poly = spec.polynomial & mask;  // leading term folded out
  for (Bit bit : data) {
    const bool feedback = ((reg & top) != 0) ^ (bit != 0);
    reg = (reg << 1) & mask;
    if (feedback) reg ^= poly;
  }
  BitVector out(spec.length);
  for (unsigned i = 0; i < spec.length; ++i)
    out[i] = (reg >> (spec.length - 1 - i)) & 1u;
  return out;
}

bool crc_check(const CrcSpec& spec, const BitVector& data_with_crc) {
  if (spec.length == 0) return true;
  if (data_with_crc.size() < spec.length)
    throw std::invalid_argument("crc_check: input shorter than CRC");
  const std::size_t split = data_with_crc.size() - spec.length;
  BitVector data(data_with_crc.begin(), data_with_crc.begin() + split);
  BitVector expect = crc_compute(spec, data);
  for (unsigned i = 0; i < spec.length; ++i)
    if (expect[i] != data_with_crc[split + i]) return false;
  return true;
}

std::size_t PartitionPlan::total_info() const {
  std::size_t sum = 0;
  for (const auto& p : partitions) sum += p.info_positions.size();
  return sum;
}

std::size_t PartitionPlan::total_crc() const {
  std::size_t sum = 0;
  for (const auto& p : partitions) sum += p.crc_positions.size();
  return sum;
}

void PartitionPlan::validate_against(const PolarCode& code) const {
  if (partitions.size() != p_count)
    throw ConfigError("partition plan: p_count mismatch");
  if (total_info() != code.n_info)
    throw ConfigError("partition plan: info bit count != K");
  if (total_crc() != code.crc_budget)
    throw ConfigError("partition plan: CRC bit count != C");
  std::size_t expected_begin = 0;
  const std::size_t width = code.n_bits / p_count;
  for (const auto& part : partitions) {
    if (part.begin != expected_begin || part.end != part.begin + width)
      throw ConfigError("partition plan: ranges do not tile [0, N)");
    expected_begin = part.end;
  }
}

PartitionPlan build_partition_plan(const PolarCode& code, std::size_t p_count,
                                   const std::vector<unsigned>& crc_lengths,
                                   const std::vector<CrcSpec>* custom_specs) {
  code.validate();
  if (p_count == 0 || (p_count & (p_count - 1)) != 0 ||
      p_count > code.n_bits / 2)
    throw ConfigError("partition count must be a power of two in [1, N/2]");
  if (crc_lengths.size() != p_count)
    throw ConfigError("partition plan: need one CRC length per partition");
  std::size_t crc_total = 0;
  for (unsigned c : crc_lengths) crc_total += c;
  if (crc_total != code.crc_budget)
    throw ConfigError("partition plan: sum of CRC lengths != C");

  const std::size_t width = code.n_bits / p_count;
  PartitionPlan plan;
  plan.p_count = p_count;
  for (std::size_t p = 0; p < p_count; ++p) {
    PartitionLayout part;
    part.begin = p * width;
    part.end = (p + 1) * width;
    std::vector<std::size_t> open;
    for (std::size_t i = part.begin; i < part.end; ++i)
      if (!code.is_frozen(i)) open.push_back(i);
    const unsigned c = crc_lengths[p];
    if (open.size() < c)
      throw ConfigError("partition " + std::to_string(p + 1) + " has only " +
                        std::to_string(open.size()) +
                        " non-frozen positions, CRC length " +
                        std::to_string(c) + " is infeasible");
    part.info_positions.assign(open.begin(), open.end() - c);
    part.crc_positions.assign(open.end() - c, open.end());
    part.crc_spec = custom_specs ? custom_specs->at(p) : standard_crc(c);
    if (part.crc_spec.length != c)
      throw ConfigError("partition plan: custom CRC spec length mismatch");
    plan.partitions.push_back(std::move(part));
  }
  plan.validate_against(code);
  return plan;
}

PartitionPlan trivial_plan(const PolarCode& code) {
  if (code.crc_budget != 0)
    throw ConfigError("trivial plan requires C = 0");
  return build_partition_plan(code, 1, {0});
}

}  // namespace polar
