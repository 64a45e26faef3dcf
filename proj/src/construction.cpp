#include "polar/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polar/channel.hpp"

namespace polar {

bool ReliabilityVector::worse(std::size_t a, std::size_t b) const {
  if (semantics == ReliabilitySemantics::kBhattacharyyaUpperIsWorse)
    return values[a] > values[b];
  return values[a] < values[b];
}

ReliabilityVector bec_reliabilities(unsigned n, double epsilon) {
  if (epsilon < 0.0 || epsilon > 1.0)
    throw ConfigError("bec_reliabilities: epsilon must be in [0, 1]");
  std::vector<double> vals{epsilon};
  for (unsigned stage = 0; stage < n; ++stage) {
    std::vector<double> next(vals.size() * 2);
    for (std::size_t i = 0; i < vals.size(); ++i) {
      const double z = vals[i];
      next[2 * i] = 2.0 * z - z * z;
      next[2 * i + 1] = z * z;
    }
    vals = std::move(next);
  }
  return {std::move(vals), ReliabilitySemantics::kBhattacharyyaUpperIsWorse};
}

namespace {
// Two-piece fit of phi(x) = 1 - E[tanh(v/2)], v ~ N(x, 2x), in log domain:
// exponential piece below x = 10, asymptotic piece above.
constexpr double kPhiSplit = 10.0;

double phi_log_small(double x) { return -0.4527 * std::pow(x, 0.86) + 0.0218; }

double phi_log_large(double x) {
  return 0.5 * (std::log(M_PI) - std::log(x)) - x / 4.0 +
         std::log1p(-10.0 / (7.0 * x));
}
}  // namespace

double ga_phi_log(double x) {
  if (x < 0.0) throw std::invalid_argument("ga_phi_log: negative mean");
  return x < kPhiSplit ? phi_log_small(x) : phi_log_large(x);
}

double ga_phi_inv_log(double y) {
  if (y >= phi_log_small(0.0)) return 0.0;
  if (y > phi_log_small(kPhiSplit))
    return std::pow((0.0218 - y) / 0.4527, 1.0 / 0.86);
  double lo = kPhiSplit, hi = std::max(2.0 * kPhiSplit, -4.0 * y + 50.0);
  for (int iter = 0; iter < 200 && hi - lo > 1e-12 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (phi_log_large(mid) > y ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

ReliabilityVector bawgn_reliabilities(unsigned n, double design_ebn0_db,
                                      double rate) {
  const double sigma2 = ebn0_to_sigma2(design_ebn0_db, rate);
  std::vector<double> means{2.0 / sigma2};
  for (unsigned stage = 0; stage < n; ++stage) {
    std::vector<double> next(means.size() * 2);
    for (std::size_t i = 0; i < means.size(); ++i) {
      const double m = means[i];
      const double lp = ga_phi_log(m);
      // check node: phi(m-) = 1 - (1 - phi(m))^2 = phi(m) (2 - phi(m))
      next[2 * i] = ga_phi_inv_log(lp + std::log(2.0 - std::exp(lp)));
      next[2 * i + 1] = 2.0 * m;  // variable node
    }
    means = std::move(next);
  }
  return {std::move(means), ReliabilitySemantics::kMeanLlrHigherIsBetter};
}

ReliabilityVector compute_reliabilities(unsigned n, const DesignSpec& spec) {
  if (spec.channel_kind == ChannelKind::BEC)
    return bec_reliabilities(n, spec.design_param);
  return bawgn_reliabilities(n, spec.design_param, spec.rate_for_conversion);
}

PolarCode build_code(std::size_t n_bits, std::size_t n_info,
                     std::size_t crc_budget, const DesignSpec& spec) {
  if (n_bits < 2 || (n_bits & (n_bits - 1)) != 0)
    throw ConfigError("build_code: N must be a power of two >= 2");
  if (n_info + crc_budget > n_bits)
    throw ConfigError("build_code: K + C exceeds N");
  const unsigned n = static_cast<unsigned>(std::log2(double(n_bits)) + 0.5);
  const ReliabilityVector rel = compute_reliabilities(n, spec);

  std::vector<std::size_t> order(n_bits);
  std::iota(order.begin(), order.end(), 0);
  // worst first; equal reliabilities freeze the lower index first
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (rel.values[a] != rel.values[b]) return rel.worse(a, b);
    return a < b;
  });

  PolarCode code;
  code.n_bits = n_bits;
  code.n_info = n_info;
  code.crc_budget = crc_budget;
  code.design_meta = spec;
  code.frozen_set.assign(order.begin(),
                         order.begin() + (n_bits - n_info - crc_budget));
  std::sort(code.frozen_set.begin(), code.frozen_set.end());
  code.validate();
  return code;
}

}  // namespace polar
