#ifndef POLAR_ANALYSIS_HPP
#define POLAR_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "polar/code.hpp"
#include "polar/crc.hpp"

namespace polar {

struct MemoryConfig {
  unsigned q_alpha = 6;  // LLR quantization bits
  unsigned q_pm = 8;     // path-metric quantization bits
};

/// (2N-1) Q_alpha + N - 1
std::uint64_t mem_sc(std::size_t n_bits, const MemoryConfig& cfg);

/// (N + (N-1)L) Q_alpha + L Q_pm + (2N-1)L
std::uint64_t mem_scl(std::size_t n_bits, std::size_t list_size,
                      const MemoryConfig& cfg);

enum class PsclMemoryVariant {
  /// Beta-storage sum runs to log2(P) - 1; reproduces the published
  /// memory figures exactly. Default.
  kFigureConsistent,
  /// Beta-storage sum runs to log2(P) as printed in the closed-form
  /// expression; comes out N/P bits larger.
  kAsPrinted,
};

std::uint64_t mem_pscl(std::size_t n_bits, std::size_t partitions,
                       std::size_t list_size, const MemoryConfig& cfg,
                       PsclMemoryVariant variant =
                           PsclMemoryVariant::kFigureConsistent);

struct MapBoundReport {
  std::optional<std::size_t> last_frozen_index;  // empty when F is empty
  std::size_t tail_free_bits = 0;   // M: non-frozen bits after the last frozen
  std::uint64_t list_bound = 1;     // 2^{(K+C) - M}
  /// Per-partition (M, bound) pairs when a plan is supplied.
  std::vector<std::pair<std::size_t, std::uint64_t>> per_partition;
};

/// Theorem bound on the SCL list size needed for MAP equivalence over the
/// BEC. All non-frozen bits (info and CRC) count as free bits.
MapBoundReport map_list_bound(const PolarCode& code,
                              const PartitionPlan* plan = nullptr);

enum class TheoremVerifyMode { kExhaustive, kSampled };

struct TheoremReport {
  std::uint64_t patterns = 0;
  std::uint64_t map_successes = 0;
  std::uint64_t mismatches = 0;       // SCL success != MAP success
  std::uint64_t peak_violations = 0;  // pre-last-frozen paths > bound
  std::size_t max_peak_before_last_frozen = 0;
  std::uint64_t list_bound = 1;
  std::uint64_t first_bad_pattern = 0;
  bool ok() const { return mismatches == 0 && peak_violations == 0; }
};

/// Runs symbolic SCL with L = map_list_bound against the exact MAP
/// ambiguity for every erasure pattern (exhaustive, N <= 16) or for
/// sample_count uniform-epsilon patterns. The all-zero codeword suffices
/// by linearity (spot-checked separately in the tests).
TheoremReport verify_theorem_bec(const PolarCode& code,
                                 TheoremVerifyMode mode,
                                 std::uint64_t sample_count = 0,
                                 double epsilon = 0.5,
                                 std::uint64_t seed = 1);

}  // namespace polar

#endif
