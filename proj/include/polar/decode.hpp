#ifndef POLAR_DECODE_HPP
#define POLAR_DECODE_HPP

#include <cstddef>
#include <vector>

#include "polar/code.hpp"
#include "polar/crc.hpp"

namespace polar {

// Elementary LLR updates. sgn(0) is treated as +.
double f_minsum(double a, double b);
double f_exact(double a, double b);  // tanh rule, stable log-domain form
double g_func(double a, double b, Bit beta);
BitVector combine_betas(const BitVector& left, const BitVector& right);

/// Penalty-metric update: metric grows by |llr| when the decision
/// contradicts the LLR sign, lower = more likely.
double path_metric_update(double metric, double llr, Bit decision);
double path_metric_update_exact(double metric, double llr, Bit decision);

struct DecodeOptions {
  /// Use the tanh-rule f and the exact path-metric increment instead of
  /// the min-sum/absolute-value forms. Sensitivity checks and the MAP
  /// equivalence suite only.
  bool exact_arithmetic = false;
  /// Literal reading of the partition survivor rule: pick the numerically
  /// largest penalty metric among CRC-passing paths (A/B comparison flag;
  /// default picks the lowest, i.e. most likely).
  bool literal_largest_metric = false;
};

struct DecodeResult {
  BitVector u_hat;              // length N
  BitVector payload_hat;        // length K (info positions only)
  std::vector<bool> crc_pass;   // one entry per partition
  double survivor_metric = 0.0; // of the last decoded partition
  std::size_t peak_paths = 0;   // diagnostics
};

DecodeResult sc_decode(const PolarCode& code, const LlrVector& llr,
                       const DecodeOptions& opt = {});

/// CRC-aided when `plan` (p_count == 1) carries a CRC; plan may be null
/// only for codes with C = 0.
DecodeResult scl_decode(const PolarCode& code, const LlrVector& llr,
                        std::size_t list_size,
                        const PartitionPlan* plan = nullptr,
                        const DecodeOptions& opt = {});

/// Partitions are decoded left to right; each runs CRC-aided SCL over the
/// length-N/P constituent code and forwards exactly one survivor. Path
/// metrics reset at partition boundaries.
DecodeResult pscl_decode(const PolarCode& code, const PartitionPlan& plan,
                         const LlrVector& llr, std::size_t list_size,
                         const DecodeOptions& opt = {});

/// Genie-aided single-partition decode: partitions before `target` are
/// replaced by the true bits, partition `target` is SCL-decoded. Returns
/// true iff the decoded bits of that partition differ from the truth.
bool pscl_genie_partition_error(const PolarCode& code,
                                const PartitionPlan& plan,
                                const LlrVector& llr, std::size_t list_size,
                                std::size_t target, const BitVector& true_u,
                                const DecodeOptions& opt = {});

struct MapResult {
  BitVector u_hat;
  BitVector payload_hat;
  bool unique = false;
  double score = 0.0;  // correlation of (1 - 2x) with the LLRs
};

/// Brute-force enumeration over all valid input vectors; K + C <= 20.
MapResult map_decode(const PolarCode& code, const LlrVector& llr,
                     const PartitionPlan* plan = nullptr);

/// Naive full-copy list decoder kept as an independent reference; output
/// contract is exact equality with scl_decode.
DecodeResult scl_decode_reference(const PolarCode& code, const LlrVector& llr,
                                  std::size_t list_size,
                                  const PartitionPlan* plan = nullptr,
                                  const DecodeOptions& opt = {});

}  // namespace polar

#endif
