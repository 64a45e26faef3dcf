#include "polar/analysis.hpp"

#include <algorithm>
#include <bit>

#include "polar/bec_symbolic.hpp"
#include "polar/channel.hpp"

namespace polar {

namespace {
unsigned log2_pow2(std::size_t v) {
  return static_cast<unsigned>(std::countr_zero(v));
}
}  // namespace

std::uint64_t mem_sc(std::size_t n_bits, const MemoryConfig& cfg) {
  if (!std::has_single_bit(n_bits))
    throw ConfigError("mem_sc: N must be a power of two");
  const std::uint64_t n = n_bits;
  return (2 * n - 1) * cfg.q_alpha + n - 1;
}

std::uint64_t mem_scl(std::size_t n_bits, std::size_t list_size,
                      const MemoryConfig& cfg) {
  if (list_size < 1) throw ConfigError("mem_scl: L must be at least 1");
  const std::uint64_t n = n_bits, l = list_size;
  return (n + (n - 1) * l) * cfg.q_alpha + l * cfg.q_pm + (2 * n - 1) * l;
}

std::uint64_t mem_pscl(std::size_t n_bits, std::size_t partitions,
                       std::size_t list_size, const MemoryConfig& cfg,
                       PsclMemoryVariant variant) {
  if (partitions < 2 || partitions >= n_bits ||
      !std::has_single_bit(partitions))
    throw ConfigError("mem_pscl: P must be a power of two in [2, N)");
  const std::uint64_t n = n_bits, l = list_size, p = partitions;
  const unsigned log_p = log2_pow2(partitions);

  std::uint64_t alpha_top = 0;  // one shared copy of the top log2 P levels
  for (unsigned k = 0; k <= log_p; ++k) alpha_top += n >> k;
  const std::uint64_t alpha_bits = (alpha_top + l * (n / p - 1)) * cfg.q_alpha;

  const unsigned beta_limit =
      variant == PsclMemoryVariant::kAsPrinted ? log_p : log_p - 1;
  std::uint64_t beta_top = 0;
  for (unsigned k = 1; k <= beta_limit; ++k) beta_top += n >> k;

  return alpha_bits + l * cfg.q_pm + beta_top + l * (2 * n / p - 1);
}

MapBoundReport map_list_bound(const PolarCode& code,
                              const PartitionPlan* plan) {
  code.validate();
  const std::size_t free_total = code.n_info + code.crc_budget;

  MapBoundReport report;
  if (code.frozen_set.empty()) {
    report.last_frozen_index.reset();
    report.tail_free_bits = free_total;
    report.list_bound = 1;
  } else {
    const std::size_t last = code.frozen_set.back();
    report.last_frozen_index = last;
    report.tail_free_bits = code.n_bits - 1 - last;  // all past `last` are free
    report.list_bound =
        std::uint64_t{1} << (free_total - report.tail_free_bits);
  }

  if (plan) {
    plan->validate_against(code);
    for (const PartitionLayout& part : plan->partitions) {
      std::size_t part_free = 0, last_frozen = part.begin;
      bool has_frozen = false;
      for (std::size_t i = part.begin; i < part.end; ++i) {
        if (code.is_frozen(i)) {
          last_frozen = i;
          has_frozen = true;
        } else {
          ++part_free;
        }
      }
      std::size_t tail = has_frozen ? part.end - 1 - last_frozen : 0;
      if (!has_frozen) tail = part_free;
      report.per_partition.emplace_back(
          tail, std::uint64_t{1} << (part_free - tail));
    }
  }
  return report;
}

TheoremReport verify_theorem_bec(const PolarCode& code,
                                 TheoremVerifyMode mode,
                                 std::uint64_t sample_count, double epsilon,
                                 std::uint64_t seed) {
  code.validate();
  const MapBoundReport bound = map_list_bound(code);

  TheoremReport report;
  report.list_bound = bound.list_bound;
  bool have_bad = false;

  const BitVector true_u(code.n_bits, 0);
  const BitVector x(code.n_bits, 0);  // all-zero codeword

  auto check_pattern = [&](const std::vector<std::uint8_t>& erased,
                           std::uint64_t tag) {
    ++report.patterns;
    const TernaryVector obs = bec_observe(x, erased);
    const SymbolicSclResult scl =
        bec_symbolic_scl(code, obs, true_u, bound.list_bound);
    const bool map_success = bec_map_ambiguity_exponent(code, erased) == 0;
    if (map_success) ++report.map_successes;
    report.max_peak_before_last_frozen = std::max(
        report.max_peak_before_last_frozen, scl.peak_before_last_frozen);
    bool bad = false;
    if (scl.success != map_success) {
      ++report.mismatches;
      bad = true;
    }
    if (scl.peak_before_last_frozen > bound.list_bound) {
      ++report.peak_violations;
      bad = true;
    }
    if (bad && !have_bad) {
      report.first_bad_pattern = tag;
      have_bad = true;
    }
  };

  if (mode == TheoremVerifyMode::kExhaustive) {
    if (code.n_bits > 16)
      throw ConfigError("verify_theorem_bec: exhaustive mode needs N <= 16");
    const std::uint64_t total = std::uint64_t{1} << code.n_bits;
    std::vector<std::uint8_t> erased(code.n_bits);
    for (std::uint64_t pattern = 0; pattern < total; ++pattern) {
      for (std::size_t i = 0; i < code.n_bits; ++i)
        erased[i] = static_cast<std::uint8_t>((pattern >> i) & 1u);
      check_pattern(erased, pattern);
    }
  } else {
    if (sample_count == 0)
      throw ConfigError("verify_theorem_bec: sampled mode needs a count");
    std::vector<std::uint8_t> erased(code.n_bits);
    for (std::uint64_t s = 0; s < sample_count; ++s) {
      FrameRng rng(seed, s);
      for (std::size_t i = 0; i < code.n_bits; ++i)
        erased[i] = rng.uniform01() <= epsilon ? 1 : 0;
      check_pattern(erased, s);
    }
  }
  return report;
}

}  // namespace polar
