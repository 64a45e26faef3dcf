#include "polar/code.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "polar/crc.hpp"

namespace polar {

std::size_t PolarCode::stages() const {
  return static_cast<std::size_t>(std::countr_zero(n_bits));
}

bool PolarCode::is_frozen(std::size_t index) const {
  return std::binary_search(frozen_set.begin(), frozen_set.end(), index);
}

std::vector<Bit> PolarCode::frozen_mask() const {
  std::vector<Bit> mask(n_bits, 0);
  for (std::size_t f : frozen_set) mask.at(f) = 1;
  return mask;
}

std::vector<std::size_t> PolarCode::open_positions() const {
  std::vector<std::size_t> open;
  open.reserve(n_bits - frozen_set.size());
  auto it = frozen_set.begin();
  for (std::size_t i = 0; i < n_bits; ++i) {
    if (it != frozen_set.end() && *it == i) {
      ++it;
    } else {
      open.push_back(i);
    }
  }
  return open;
}

void PolarCode::validate() const {
  if (n_bits < 2 || !std::has_single_bit(n_bits))
    throw ConfigError("block length must be a power of two >= 2");
  if (frozen_set.size() + n_info + crc_budget != n_bits)
    throw ConfigError("|F| + K + C must equal N");
  for (std::size_t i = 0; i < frozen_set.size(); ++i) {
    if (frozen_set[i] >= n_bits)
      throw ConfigError("frozen index out of range");
    if (i > 0 && frozen_set[i] <= frozen_set[i - 1])
      throw ConfigError("frozen indices must be strictly increasing");
  }
}

std::size_t bit_reverse_permutation(std::size_t index, unsigned n) {
  if (index >= (std::size_t{1} << n))
    throw std::invalid_argument("bit_reverse_permutation: index out of range");
  std::size_t out = 0;
  for (unsigned b = 0; b < n; ++b)
    out |= ((index >> b) & 1u) << (n - 1 - b);
  return out;
}

BitVector polar_transform(BitVector u) {
  const std::size_t n_bits = u.size();
  for (std::size_t step = 1; step < n_bits; step <<= 1)
    for (std::size_t block = 0; block < n_bits; block += 2 * step)
      for (std::size_t j = 0; j < step; ++j)
        u[block + j] ^= u[block + j + step];
  return u;
}

BitVector encode(const PolarCode& code, const BitVector& u) {
  if (u.size() != code.n_bits)
    throw std::invalid_argument("encode: input length != N");
  const unsigned n = static_cast<unsigned>(code.stages());
  BitVector permuted(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    permuted[bit_reverse_permutation(i, n)] = u[i];
  return polar_transform(std::move(permuted));
}

BitVector message_to_input_vector(const PolarCode& code,
                                  const PartitionPlan& plan,
                                  const BitVector& payload) {
  if (payload.size() != code.n_info)
    throw std::invalid_argument("message_to_input_vector: payload length != K");
  plan.validate_against(code);

  BitVector u(code.n_bits, 0);
  std::size_t next_payload = 0;
  for (const PartitionLayout& part : plan.partitions) {
    BitVector info_bits;
    info_bits.reserve(part.info_positions.size());
    for (std::size_t pos : part.info_positions) {
      u[pos] = payload[next_payload];
      info_bits.push_back(payload[next_payload]);
      ++next_payload;
    }
    if (!part.crc_positions.empty()) {
      BitVector crc = crc_compute(part.crc_spec, info_bits);
      for (std::size_t j = 0; j < part.crc_positions.size(); ++j)
        u[part.crc_positions[j]] = crc[j];
    }
  }
  return u;
}

void write_code_spec(std::ostream& os, const PolarCode& code) {
  os << "N=" << code.n_bits << " K=" << code.n_info << " C=" << code.crc_budget
     << '\n';
  for (std::size_t i = 0; i < code.frozen_set.size(); ++i) {
    if (i) os << ' ';
    os << code.frozen_set[i];
  }
  os << '\n';
}

PolarCode read_code_spec(std::istream& is) {
  std::string header;
  if (!std::getline(is, header))
    throw ConfigError("code-spec: missing header line");
  PolarCode code;
  if (std::sscanf(header.c_str(), "N=%zu K=%zu C=%zu", &code.n_bits,
                  &code.n_info, &code.crc_budget) != 3)
    throw ConfigError("code-spec: malformed header: " + header);
  std::string body;
  std::getline(is, body);
  std::istringstream bs(body);
  std::size_t idx;
  while (bs >> idx) code.frozen_set.push_back(idx);
  code.validate();
  return code;
}

PolarCode read_code_spec_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open code-spec file: " + path);
  return read_code_spec(is);
}

void write_code_spec_file(const std::string& path, const PolarCode& code) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot write code-spec file: " + path);
  write_code_spec(os, code);
}

}  // namespace polar
