#ifndef POLAR_CONSTRUCTION_HPP
#define POLAR_CONSTRUCTION_HPP

#include "polar/code.hpp"

namespace polar {

enum class ReliabilitySemantics {
  kBhattacharyyaUpperIsWorse,  // BEC: erasure probability, in [0, 1]
  kMeanLlrHigherIsBetter,      // BAWGN: mean LLR under density evolution
};

struct ReliabilityVector {
  std::vector<double> values;  // one per synthetic channel, u_0..u_{N-1}
  ReliabilitySemantics semantics =
      ReliabilitySemantics::kBhattacharyyaUpperIsWorse;

  /// True iff channel a is strictly worse than channel b.
  bool worse(std::size_t a, std::size_t b) const;
};

/// Exact Bhattacharyya parameters for BEC(epsilon): Z- = 2z - z^2,
/// Z+ = z^2, applied n times, indexed in decoder visit order.
ReliabilityVector bec_reliabilities(unsigned n, double epsilon);

/// Gaussian-approximation density evolution on the mean LLR, root mean
/// 2/sigma^2 with sigma^2 = 1/(2 rate 10^{ebn0/10}). Check-node update via
/// the phi-function approximation, variable-node update m+ = 2m.
ReliabilityVector bawgn_reliabilities(unsigned n, double design_ebn0_db,
                                      double rate);

ReliabilityVector compute_reliabilities(unsigned n, const DesignSpec& spec);

/// Freezes the N-K-C worst synthetic channels under the design spec.
/// Ties freeze the lower index first.
PolarCode build_code(std::size_t n_bits, std::size_t n_info,
                     std::size_t crc_budget, const DesignSpec& spec);

// phi-function machinery, exposed for the construction tests.
double ga_phi_log(double x);      // ln(phi(x)), x >= 0
double ga_phi_inv_log(double y);  // inverse of ga_phi_log

}  // namespace polar

#endif
