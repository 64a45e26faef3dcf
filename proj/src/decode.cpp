#include "polar/decode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>

namespace polar {

double f_minsum(double a, double b) {
  const double sign = ((a < 0.0) != (b < 0.0)) ? -1.0 : 1.0;
  return sign * std::min(std::fabs(a), std::fabs(b));
}

namespace {
double softplus(double z) {  // log(1 + e^z), overflow safe
  return z > 35.0 ? z : std::log1p(std::exp(z));
}
}  // namespace

double f_exact(double a, double b) {
  // 2 atanh(tanh(a/2) tanh(b/2)) in the numerically stable Jacobian form
  return f_minsum(a, b) + softplus(-std::fabs(a + b)) -
         softplus(-std::fabs(a - b));
}

double g_func(double a, double b, Bit beta) { return beta ? b - a : b + a; }

BitVector combine_betas(const BitVector& left, const BitVector& right) {
  if (left.size() != right.size())
    throw std::invalid_argument("combine_betas: length mismatch");
  BitVector out(2 * left.size());
  for (std::size_t j = 0; j < left.size(); ++j) {
    out[j] = left[j] ^ right[j];
    out[j + left.size()] = right[j];
  }
  return out;
}

double path_metric_update(double metric, double llr, Bit decision) {
  // sgn(0) = +, so a zero LLR penalizes either decision by 0
  const Bit favored = llr < 0.0 ? 1 : 0;
  return decision == favored ? metric : metric + std::fabs(llr);
}

double path_metric_update_exact(double metric, double llr, Bit decision) {
  return metric + softplus(decision ? llr : -llr);
}

namespace {

// ---------------------------------------------------------------------------
// Copy-on-write level buffers. Every write to a level array is a full
// overwrite, so a shared buffer is detached by handing the writer a fresh
// (uninitialized) one; no data is copied on fork.
// ---------------------------------------------------------------------------

template <typename T>
class Pool {
 public:
  struct Buf {
    std::vector<T> data;
    int rc = 0;
    unsigned level = 0;
  };

  explicit Pool(unsigned levels) : free_(levels + 1) {}

  Buf* alloc(unsigned level) {
    auto& fl = free_[level];
    if (!fl.empty()) {
      Buf* b = fl.back();
      fl.pop_back();
      b->rc = 1;
      return b;
    }
    store_.push_back(std::make_unique<Buf>());
    Buf* b = store_.back().get();
    b->data.resize(std::size_t{1} << level);
    b->level = level;
    b->rc = 1;
    return b;
  }

  void retain(Buf* b) {
    if (b) ++b->rc;
  }
  void release(Buf*& b) {
    if (b && --b->rc == 0) free_[b->level].push_back(b);
    b = nullptr;
  }

 private:
  std::vector<std::vector<Buf*>> free_;
  std::vector<std::unique_ptr<Buf>> store_;
};

using LlrBuf = Pool<double>::Buf;
using BitBuf = Pool<Bit>::Buf;

struct Survivor {
  BitVector decisions;  // sub-code input bits, natural order
  BitVector root_beta;  // sub-code transform of the decisions
  double metric = 0.0;
  bool crc_ok = true;
  std::size_t peak_paths = 1;
};

/// List decoder over one constituent code of size 2^m. Paths advance in
/// lockstep through a depth-first traversal; forks happen at non-frozen
/// leaves and the list is pruned to the L lowest penalty metrics with the
/// (metric, parent order, 0-before-1) tie-break.
class SubtreeListDecoder {
 public:
  SubtreeListDecoder(unsigned m, std::size_t list_size,
                     const std::vector<Bit>& frozen, const CrcSpec& crc,
                     const std::vector<std::size_t>& info_rel,
                     const std::vector<std::size_t>& crc_rel,
                     const DecodeOptions& opt)
      : m_(m),
        list_size_(list_size),
        frozen_(frozen),
        crc_(crc),
        info_rel_(info_rel),
        crc_rel_(crc_rel),
        opt_(opt),
        llr_pool_(m),
        bit_pool_(m) {
    if (list_size_ == 0)
      throw ConfigError("list size must be at least 1");
  }

  Survivor run(const double* root_llr) {
    const std::size_t size = std::size_t{1} << m_;
    paths_.clear();
    peak_ = 1;
    leaf_ = 0;
    Path root;
    root.alpha.assign(m_ + 1, nullptr);
    root.beta.assign(m_ + 1, nullptr);
    root.beta_left.assign(m_ + 1, nullptr);
    root.decisions.assign(size, 0);
    root.alpha[m_] = llr_pool_.alloc(m_);
    std::copy(root_llr, root_llr + size, root.alpha[m_]->data.begin());
    paths_.push_back(std::move(root));

    decode_node(m_);
    Survivor out = select_survivor();
    for (Path& p : paths_) destroy(p);
    paths_.clear();
    return out;
  }

 private:
  struct Path {
    std::vector<LlrBuf*> alpha;
    std::vector<BitBuf*> beta;
    std::vector<BitBuf*> beta_left;
    BitVector decisions;
    double pm = 0.0;
  };

  double* writable_alpha(Path& p, unsigned t) {
    if (!p.alpha[t] || p.alpha[t]->rc > 1) {
      llr_pool_.release(p.alpha[t]);
      p.alpha[t] = llr_pool_.alloc(t);
    }
    return p.alpha[t]->data.data();
  }

  Bit* writable_beta(Path& p, unsigned t) {
    if (!p.beta[t] || p.beta[t]->rc > 1) {
      bit_pool_.release(p.beta[t]);
      p.beta[t] = bit_pool_.alloc(t);
    }
    return p.beta[t]->data.data();
  }

  Path clone(const Path& src) {
    Path out;
    out.alpha = src.alpha;
    out.beta = src.beta;
    out.beta_left = src.beta_left;
    for (LlrBuf* b : out.alpha) llr_pool_.retain(b);
    for (BitBuf* b : out.beta) bit_pool_.retain(b);
    for (BitBuf* b : out.beta_left) bit_pool_.retain(b);
    out.decisions = src.decisions;
    out.pm = src.pm;
    return out;
  }

  void destroy(Path& p) {
    for (LlrBuf*& b : p.alpha) llr_pool_.release(b);
    for (BitBuf*& b : p.beta) bit_pool_.release(b);
    for (BitBuf*& b : p.beta_left) bit_pool_.release(b);
  }

  void decode_node(unsigned t) {
    if (t == 0) {
      handle_leaf();
      ++leaf_;
      return;
    }
    const std::size_t half = std::size_t{1} << (t - 1);
    for (Path& p : paths_) {
      const double* a = p.alpha[t]->data.data();
      double* out = writable_alpha(p, t - 1);
      if (opt_.exact_arithmetic) {
        for (std::size_t j = 0; j < half; ++j)
          out[j] = f_exact(a[j], a[j + half]);
      } else {
        for (std::size_t j = 0; j < half; ++j)
          out[j] = f_minsum(a[j], a[j + half]);
      }
    }
    decode_node(t - 1);

    for (Path& p : paths_) {
      bit_pool_.release(p.beta_left[t - 1]);
      p.beta_left[t - 1] = p.beta[t - 1];
      p.beta[t - 1] = nullptr;
    }
    for (Path& p : paths_) {
      const double* a = p.alpha[t]->data.data();
      const Bit* bl = p.beta_left[t - 1]->data.data();
      double* out = writable_alpha(p, t - 1);
      for (std::size_t j = 0; j < half; ++j)
        out[j] = g_func(a[j], a[j + half], bl[j]);
    }
    decode_node(t - 1);

    for (Path& p : paths_) {
      const Bit* bl = p.beta_left[t - 1]->data.data();
      const Bit* br = p.beta[t - 1]->data.data();
      Bit* out = writable_beta(p, t);
      for (std::size_t j = 0; j < half; ++j) {
        out[j] = bl[j] ^ br[j];
        out[j + half] = br[j];
      }
      bit_pool_.release(p.beta_left[t - 1]);
    }
  }

  double metric_update(double pm, double llr, Bit d) const {
    return opt_.exact_arithmetic ? path_metric_update_exact(pm, llr, d)
                                 : path_metric_update(pm, llr, d);
  }

  void handle_leaf() {
    const std::size_t i = leaf_;
    if (frozen_[i]) {
      for (Path& p : paths_) {
        const double llr = p.alpha[0]->data[0];
        p.pm = metric_update(p.pm, llr, 0);
        writable_beta(p, 0)[0] = 0;
        p.decisions[i] = 0;
      }
      return;
    }

    struct Cand {
      double pm;
      std::uint32_t parent;
      Bit bit;
    };
    std::vector<Cand> cands;
    cands.reserve(2 * paths_.size());
    for (std::uint32_t k = 0; k < paths_.size(); ++k) {
      const double llr = paths_[k].alpha[0]->data[0];
      cands.push_back({metric_update(paths_[k].pm, llr, 0), k, 0});
      cands.push_back({metric_update(paths_[k].pm, llr, 1), k, 1});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      if (a.pm != b.pm) return a.pm < b.pm;
      if (a.parent != b.parent) return a.parent < b.parent;
      return a.bit < b.bit;
    });
    const std::size_t keep = std::min(list_size_, cands.size());

    std::vector<std::uint8_t> kept_count(paths_.size(), 0);
    for (std::size_t c = 0; c < keep; ++c) ++kept_count[cands[c].parent];

    std::vector<Path> next;
    next.reserve(keep);
    for (std::size_t c = 0; c < keep; ++c) {
      const Cand& cand = cands[c];
      Path np;
      if (kept_count[cand.parent] == 2) {
        np = clone(paths_[cand.parent]);  // sibling still needs the original
        kept_count[cand.parent] = 1;
      } else {
        np = std::move(paths_[cand.parent]);
      }
      np.pm = cand.pm;
      writable_beta(np, 0)[0] = cand.bit;
      np.decisions[i] = cand.bit;
      next.push_back(std::move(np));
    }
    for (std::size_t k = 0; k < paths_.size(); ++k)
      if (kept_count[k] == 0 && !paths_[k].alpha.empty()) destroy(paths_[k]);
    paths_ = std::move(next);
    peak_ = std::max(peak_, paths_.size());
  }

  bool crc_ok(const Path& p) const {
    if (crc_.length == 0) return true;
    BitVector data;
    data.reserve(info_rel_.size() + crc_rel_.size());
    for (std::size_t pos : info_rel_) data.push_back(p.decisions[pos]);
    for (std::size_t pos : crc_rel_) data.push_back(p.decisions[pos]);
    return crc_check(crc_, data);
  }

  Survivor select_survivor() {
    int best = -1;
    bool best_pass = false;
    const bool want_max = opt_.literal_largest_metric && crc_.length > 0;
    for (std::size_t k = 0; k < paths_.size(); ++k) {
      const bool pass = crc_ok(paths_[k]);
      if (best < 0) {
        best = static_cast<int>(k);
        best_pass = pass;
        continue;
      }
      if (pass != best_pass) {
        if (pass) {
          best = static_cast<int>(k);
          best_pass = true;
        }
        continue;
      }
      const double pm = paths_[k].pm, bpm = paths_[std::size_t(best)].pm;
      const bool better = (want_max && pass) ? pm > bpm : pm < bpm;
      if (better) best = static_cast<int>(k);
    }
    const Path& win = paths_[std::size_t(best)];
    Survivor out;
    out.decisions = win.decisions;
    out.root_beta = win.beta[m_]->data;
    out.metric = win.pm;
    out.crc_ok = best_pass;
    out.peak_paths = peak_;
    return out;
  }

  unsigned m_;
  std::size_t list_size_;
  const std::vector<Bit>& frozen_;
  const CrcSpec& crc_;
  const std::vector<std::size_t>& info_rel_;
  const std::vector<std::size_t>& crc_rel_;
  DecodeOptions opt_;
  Pool<double> llr_pool_;
  Pool<Bit> bit_pool_;
  std::vector<Path> paths_;
  std::size_t peak_ = 1;
  std::size_t leaf_ = 0;
};

unsigned log2_exact(std::size_t v) {
  unsigned n = 0;
  while ((std::size_t{1} << n) < v) ++n;
  return n;
}

struct GenieSetup {
  std::size_t target = 0;
  const BitVector* true_u = nullptr;
  bool partition_error = false;
};

/// Shared driver for SC/SCL/PSCL: bit-reverses the channel LLRs once so
/// subtree leaves are u in natural order, walks the top log2(P) tree levels
/// with a single set of arrays, and runs the list decoder per partition.
DecodeResult pscl_core(const PolarCode& code, const PartitionPlan& plan,
                       const LlrVector& llr, std::size_t list_size,
                       const DecodeOptions& opt, GenieSetup* genie) {
  code.validate();
  plan.validate_against(code);
  if (llr.size() != code.n_bits)
    throw std::invalid_argument("decode: LLR length != N");
  const unsigned n = static_cast<unsigned>(code.stages());
  const unsigned top = log2_exact(plan.p_count);
  const unsigned q = n - top;  // partition subtree size = 2^q
  const std::size_t width = std::size_t{1} << q;
  const std::vector<Bit> frozen_mask = code.frozen_mask();

  std::vector<double> root(code.n_bits);
  for (std::size_t j = 0; j < code.n_bits; ++j)
    root[j] = llr[bit_reverse_permutation(j, n)];

  DecodeResult result;
  result.u_hat.assign(code.n_bits, 0);
  result.crc_pass.assign(plan.p_count, true);
  result.peak_paths = 1;

  std::size_t next_partition = 0;
  bool done = false;

  // recursive walk of the shared top levels; returns the node's beta
  auto walk = [&](auto&& self, unsigned t, std::vector<double>& a)
      -> BitVector {
    if (done) return BitVector(std::size_t{1} << t, 0);
    if (t == q) {
      const std::size_t p = next_partition++;
      const PartitionLayout& part = plan.partitions[p];
      const std::size_t off = part.begin;

      if (genie && p < genie->target) {
        BitVector dec(genie->true_u->begin() + off,
                      genie->true_u->begin() + off + width);
        std::copy(dec.begin(), dec.end(), result.u_hat.begin() + off);
        return polar_transform(std::move(dec));
      }

      std::vector<Bit> sub_frozen(frozen_mask.begin() + off,
                                  frozen_mask.begin() + off + width);
      std::vector<std::size_t> info_rel, crc_rel;
      for (std::size_t pos : part.info_positions) info_rel.push_back(pos - off);
      for (std::size_t pos : part.crc_positions) crc_rel.push_back(pos - off);

      SubtreeListDecoder dec(q, list_size, sub_frozen, part.crc_spec,
                             info_rel, crc_rel, opt);
      Survivor s = dec.run(a.data());
      std::copy(s.decisions.begin(), s.decisions.end(),
                result.u_hat.begin() + off);
      result.crc_pass[p] = s.crc_ok;
      result.survivor_metric = s.metric;
      result.peak_paths = std::max(result.peak_paths, s.peak_paths);

      if (genie && p == genie->target) {
        genie->partition_error = !std::equal(
            s.decisions.begin(), s.decisions.end(),
            genie->true_u->begin() + static_cast<std::ptrdiff_t>(off));
        done = true;
      }
      return s.root_beta;
    }
    const std::size_t half = std::size_t{1} << (t - 1);
    std::vector<double> child(half);
    for (std::size_t j = 0; j < half; ++j)
      child[j] = opt.exact_arithmetic ? f_exact(a[j], a[j + half])
                                      : f_minsum(a[j], a[j + half]);
    BitVector left = self(self, t - 1, child);
    for (std::size_t j = 0; j < half; ++j)
      child[j] = g_func(a[j], a[j + half], left[j]);
    BitVector right = self(self, t - 1, child);
    return combine_betas(left, right);
  };
  walk(walk, n, root);

  result.payload_hat.reserve(code.n_info);
  for (const PartitionLayout& part : plan.partitions)
    for (std::size_t pos : part.info_positions)
      result.payload_hat.push_back(result.u_hat[pos]);
  return result;
}

}  // namespace

DecodeResult sc_decode(const PolarCode& code, const LlrVector& llr,
                       const DecodeOptions& opt) {
  return scl_decode(code, llr, 1, nullptr, opt);
}

DecodeResult scl_decode(const PolarCode& code, const LlrVector& llr,
                        std::size_t list_size, const PartitionPlan* plan,
                        const DecodeOptions& opt) {
  PartitionPlan local;
  if (!plan) {
    if (code.crc_budget != 0)
      throw ConfigError("scl_decode: code carries CRC bits, a plan is needed");
    local = trivial_plan(code);
    plan = &local;
  }
  if (plan->p_count != 1)
    throw ConfigError("scl_decode: plan must have a single partition");
  return pscl_core(code, *plan, llr, list_size, opt, nullptr);
}

DecodeResult pscl_decode(const PolarCode& code, const PartitionPlan& plan,
                         const LlrVector& llr, std::size_t list_size,
                         const DecodeOptions& opt) {
  return pscl_core(code, plan, llr, list_size, opt, nullptr);
}

bool pscl_genie_partition_error(const PolarCode& code,
                                const PartitionPlan& plan,
                                const LlrVector& llr, std::size_t list_size,
                                std::size_t target, const BitVector& true_u,
                                const DecodeOptions& opt) {
  if (target >= plan.p_count)
    throw ConfigError("genie decode: target partition out of range");
  if (true_u.size() != code.n_bits)
    throw std::invalid_argument("genie decode: true_u length != N");
  GenieSetup genie;
  genie.target = target;
  genie.true_u = &true_u;
  pscl_core(code, plan, llr, list_size, opt, &genie);
  return genie.partition_error;
}

MapResult map_decode(const PolarCode& code, const LlrVector& llr,
                     const PartitionPlan* plan) {
  code.validate();
  if (llr.size() != code.n_bits)
    throw std::invalid_argument("map_decode: LLR length != N");
  const std::size_t free_bits = code.n_info + (plan ? 0 : code.crc_budget);
  if (free_bits > 20)
    throw ConfigError("map_decode: more than 20 free bits, refusing");
  if (!plan && code.crc_budget != 0)
    throw ConfigError("map_decode: code carries CRC bits, a plan is needed");

  const std::vector<std::size_t> open = code.open_positions();
  MapResult best;
  double second = -1e300;
  best.score = -1e300;
  for (std::size_t word = 0; word < (std::size_t{1} << free_bits); ++word) {
    BitVector payload(free_bits);
    for (std::size_t b = 0; b < free_bits; ++b)
      payload[b] = static_cast<Bit>((word >> b) & 1u);
    BitVector u;
    if (plan) {
      u = message_to_input_vector(code, *plan, payload);
    } else {
      u.assign(code.n_bits, 0);
      for (std::size_t b = 0; b < free_bits; ++b) u[open[b]] = payload[b];
    }
    const BitVector x = encode(code, u);
    double score = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
      score += (1.0 - 2.0 * x[i]) * llr[i];
    if (score > best.score) {
      second = best.score;
      best.score = score;
      best.u_hat = std::move(u);
      best.payload_hat = std::move(payload);
    } else if (score > second) {
      second = score;
    }
  }
  best.unique =
      best.score - second > 1e-9 * std::max(1.0, std::fabs(best.score));
  return best;
}

// ---------------------------------------------------------------------------
// Naive full-copy list decoder (reference). Independent of the pooled
// implementation above: every path owns plain per-level vectors and forking
// deep-copies the whole state.
// ---------------------------------------------------------------------------

namespace {

struct RefPath {
  std::vector<std::vector<double>> alpha;
  std::vector<BitVector> beta;
  std::vector<BitVector> beta_left;
  BitVector decisions;
  double pm = 0.0;
};

struct RefDecoder {
  unsigned m;
  std::size_t list_size;
  std::vector<Bit> frozen;
  CrcSpec crc;
  std::vector<std::size_t> info_rel, crc_rel;
  DecodeOptions opt;
  std::vector<RefPath> paths;
  std::size_t leaf = 0;

  double metric_update(double pm, double llr, Bit d) const {
    return opt.exact_arithmetic ? path_metric_update_exact(pm, llr, d)
                                : path_metric_update(pm, llr, d);
  }

  void node(unsigned t) {
    if (t == 0) {
      at_leaf();
      ++leaf;
      return;
    }
    const std::size_t half = std::size_t{1} << (t - 1);
    for (RefPath& p : paths)
      for (std::size_t j = 0; j < half; ++j)
        p.alpha[t - 1][j] =
            opt.exact_arithmetic ? f_exact(p.alpha[t][j], p.alpha[t][j + half])
                                 : f_minsum(p.alpha[t][j], p.alpha[t][j + half]);
    node(t - 1);
    for (RefPath& p : paths) {
      p.beta_left[t - 1] = p.beta[t - 1];
      for (std::size_t j = 0; j < half; ++j)
        p.alpha[t - 1][j] =
            g_func(p.alpha[t][j], p.alpha[t][j + half], p.beta_left[t - 1][j]);
    }
    node(t - 1);
    for (RefPath& p : paths)
      p.beta[t] = combine_betas(p.beta_left[t - 1], p.beta[t - 1]);
  }

  void at_leaf() {
    if (frozen[leaf]) {
      for (RefPath& p : paths) {
        p.pm = metric_update(p.pm, p.alpha[0][0], 0);
        p.beta[0][0] = 0;
        p.decisions[leaf] = 0;
      }
      return;
    }
    struct Cand {
      double pm;
      std::size_t parent;
      Bit bit;
    };
    std::vector<Cand> cands;
    for (std::size_t k = 0; k < paths.size(); ++k) {
      const double llr = paths[k].alpha[0][0];
      cands.push_back({metric_update(paths[k].pm, llr, 0), k, 0});
      cands.push_back({metric_update(paths[k].pm, llr, 1), k, 1});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      if (a.pm != b.pm) return a.pm < b.pm;
      if (a.parent != b.parent) return a.parent < b.parent;
      return a.bit < b.bit;
    });
    std::vector<RefPath> next;
    for (std::size_t c = 0; c < std::min(list_size, cands.size()); ++c) {
      RefPath np = paths[cands[c].parent];  // deep copy
      np.pm = cands[c].pm;
      np.beta[0][0] = cands[c].bit;
      np.decisions[leaf] = cands[c].bit;
      next.push_back(std::move(np));
    }
    paths = std::move(next);
  }
};

}  // namespace

DecodeResult scl_decode_reference(const PolarCode& code, const LlrVector& llr,
                                  std::size_t list_size,
                                  const PartitionPlan* plan,
                                  const DecodeOptions& opt) {
  PartitionPlan local;
  if (!plan) {
    if (code.crc_budget != 0)
      throw ConfigError("reference decoder: CRC code needs a plan");
    local = trivial_plan(code);
    plan = &local;
  }
  if (plan->p_count != 1)
    throw ConfigError("reference decoder: single partition only");
  plan->validate_against(code);

  const unsigned n = static_cast<unsigned>(code.stages());
  RefDecoder dec;
  dec.m = n;
  dec.list_size = list_size;
  dec.frozen = code.frozen_mask();
  dec.crc = plan->partitions[0].crc_spec;
  dec.info_rel = plan->partitions[0].info_positions;
  dec.crc_rel = plan->partitions[0].crc_positions;
  dec.opt = opt;

  RefPath root;
  root.alpha.resize(n + 1);
  root.beta.resize(n + 1);
  root.beta_left.resize(n + 1);
  for (unsigned t = 0; t <= n; ++t) {
    root.alpha[t].resize(std::size_t{1} << t);
    root.beta[t].resize(std::size_t{1} << t);
    root.beta_left[t].resize(std::size_t{1} << t);
  }
  root.decisions.assign(code.n_bits, 0);
  for (std::size_t j = 0; j < code.n_bits; ++j)
    root.alpha[n][j] = llr[bit_reverse_permutation(j, n)];
  dec.paths.push_back(std::move(root));
  dec.node(n);

  auto passes = [&](const RefPath& p) {
    if (dec.crc.length == 0) return true;
    BitVector data;
    for (std::size_t pos : dec.info_rel) data.push_back(p.decisions[pos]);
    for (std::size_t pos : dec.crc_rel) data.push_back(p.decisions[pos]);
    return crc_check(dec.crc, data);
  };

  int best = -1;
  bool best_pass = false;
  const bool want_max = opt.literal_largest_metric && dec.crc.length > 0;
  for (std::size_t k = 0; k < dec.paths.size(); ++k) {
    const bool pass = passes(dec.paths[k]);
    if (best < 0 || (pass && !best_pass)) {
      best = static_cast<int>(k);
      best_pass = pass;
      continue;
    }
    if (pass != best_pass) continue;
    const double pm = dec.paths[k].pm, bpm = dec.paths[std::size_t(best)].pm;
    if ((want_max && pass) ? pm > bpm : pm < bpm) best = static_cast<int>(k);
  }

  const RefPath& win = dec.paths[std::size_t(best)];
  DecodeResult result;
  result.u_hat = win.decisions;
  result.crc_pass = {best_pass};
  result.survivor_metric = win.pm;
  result.peak_paths = dec.paths.size();
  for (std::size_t pos : plan->partitions[0].info_positions)
    result.payload_hat.push_back(win.decisions[pos]);
  return result;
}

}  // namespace polar
