#include "polar/bec_symbolic.hpp"

#include <algorithm>

namespace polar {

TernaryVector bec_observe(const BitVector& x,
                          const std::vector<std::uint8_t>& erased) {
  if (x.size() != erased.size())
    throw std::invalid_argument("bec_observe: length mismatch");
  TernaryVector obs(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    obs[i] = erased[i] ? Ternary{0} : (x[i] ? Ternary{-1} : Ternary{1});
  return obs;
}

namespace {

struct SymPath {
  std::vector<TernaryVector> alpha;
  std::vector<BitVector> beta;
  std::vector<BitVector> beta_left;
  BitVector decisions;
  bool dead = false;
};

Ternary sym_f(Ternary a, Ternary b) {
  return static_cast<Ternary>(a * b);  // either erased -> 0, else sign product
}

// g = b + (1 - 2 beta) a; a fully contradicting b kills the path.
Ternary sym_g(Ternary a, Ternary b, Bit beta, bool& conflict) {
  const int s = b + (beta ? -a : a);
  if (s == 0 && a != 0 && b != 0) conflict = true;
  return static_cast<Ternary>(s > 0 ? 1 : (s < 0 ? -1 : 0));
}

struct SymDecoder {
  unsigned m = 0;
  std::size_t cap = 0;  // 0 = unbounded
  std::vector<Bit> frozen;
  std::ptrdiff_t last_frozen_leaf = -1;
  std::vector<SymPath> paths;
  std::size_t leaf = 0;
  SymbolicSclResult stats;

  void sweep_dead() {
    const std::size_t before = paths.size();
    paths.erase(std::remove_if(paths.begin(), paths.end(),
                               [](const SymPath& p) { return p.dead; }),
                paths.end());
    stats.cancellations += before - paths.size();
  }

  void node(unsigned t) {
    if (t == 0) {
      at_leaf();
      ++leaf;
      return;
    }
    const std::size_t half = std::size_t{1} << (t - 1);
    for (SymPath& p : paths)
      for (std::size_t j = 0; j < half; ++j)
        p.alpha[t - 1][j] = sym_f(p.alpha[t][j], p.alpha[t][j + half]);
    node(t - 1);
    for (SymPath& p : paths) {
      p.beta_left[t - 1] = p.beta[t - 1];
      bool conflict = false;
      for (std::size_t j = 0; j < half; ++j)
        p.alpha[t - 1][j] = sym_g(p.alpha[t][j], p.alpha[t][j + half],
                                  p.beta_left[t - 1][j], conflict);
      if (conflict) p.dead = true;
    }
    sweep_dead();
    node(t - 1);
    for (SymPath& p : paths)
      for (std::size_t j = 0; j < half; ++j) {
        p.beta[t][j] = p.beta_left[t - 1][j] ^ p.beta[t - 1][j];
        p.beta[t][j + half] = p.beta[t - 1][j];
      }
  }

  void at_leaf() {
    if (frozen[leaf]) {
      for (SymPath& p : paths) {
        if (p.alpha[0][0] < 0) p.dead = true;  // evidence says one, frozen zero
        p.beta[0][0] = 0;
        p.decisions[leaf] = 0;
      }
      sweep_dead();
    } else {
      std::vector<SymPath> next;
      next.reserve(2 * paths.size());
      for (SymPath& p : paths) {
        const Ternary a = p.alpha[0][0];
        if (a != 0) {
          const Bit d = a < 0 ? 1 : 0;
          p.beta[0][0] = d;
          p.decisions[leaf] = d;
          next.push_back(std::move(p));
        } else {
          // erased: both continuations are consistent and equally likely
          SymPath twin = p;
          p.beta[0][0] = 0;
          p.decisions[leaf] = 0;
          twin.beta[0][0] = 1;
          twin.decisions[leaf] = 1;
          next.push_back(std::move(p));
          next.push_back(std::move(twin));
          ++stats.doublings;
        }
      }
      paths = std::move(next);
      // The list bound only covers the stretch up to the last frozen leaf;
      // forks after it stay alive (later conflicts may still resolve them,
      // or they survive as genuine MAP ambiguity).
      if (cap != 0 && paths.size() > cap &&
          static_cast<std::ptrdiff_t>(leaf) <= last_frozen_leaf)
        paths.resize(cap);
      if (paths.size() > (std::size_t{1} << 22))
        throw ConfigError("bec_symbolic_scl: path count blew up");
    }
    stats.peak_paths = std::max(stats.peak_paths, paths.size());
    if (static_cast<std::ptrdiff_t>(leaf) <= last_frozen_leaf)
      stats.peak_before_last_frozen =
          std::max(stats.peak_before_last_frozen, paths.size());
  }
};

}  // namespace

SymbolicSclResult bec_symbolic_scl(const PolarCode& code,
                                   const TernaryVector& channel,
                                   const BitVector& true_u,
                                   std::size_t list_cap) {
  code.validate();
  if (channel.size() != code.n_bits || true_u.size() != code.n_bits)
    throw std::invalid_argument("bec_symbolic_scl: length mismatch");
  const unsigned n = static_cast<unsigned>(code.stages());

  SymDecoder dec;
  dec.m = n;
  dec.cap = list_cap;
  dec.frozen = code.frozen_mask();
  dec.last_frozen_leaf =
      code.frozen_set.empty()
          ? -1
          : static_cast<std::ptrdiff_t>(code.frozen_set.back());

  SymPath root;
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
    root.alpha[n][j] = channel[bit_reverse_permutation(j, n)];
  dec.paths.push_back(std::move(root));
  dec.node(n);

  SymbolicSclResult out = dec.stats;
  out.final_paths = dec.paths.size();
  out.success = dec.paths.size() == 1 && dec.paths[0].decisions == true_u;
  return out;
}

std::size_t bec_map_ambiguity_exponent(
    const PolarCode& code, const std::vector<std::uint8_t>& erased) {
  code.validate();
  if (erased.size() != code.n_bits)
    throw std::invalid_argument("bec_map_ambiguity_exponent: length mismatch");
  if (code.n_bits > 32)
    throw ConfigError("bec_map_ambiguity_exponent: N <= 32 only");

  // Generator rows restricted to the unerased columns; ambiguity is the
  // nullity of that submatrix over GF(2).
  std::vector<std::uint32_t> rows;
  for (std::size_t i : code.open_positions()) {
    BitVector u(code.n_bits, 0);
    u[i] = 1;
    const BitVector x = encode(code, u);
    std::uint32_t row = 0;
    for (std::size_t j = 0; j < code.n_bits; ++j)
      if (!erased[j] && x[j]) row |= (1u << j);
    rows.push_back(row);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < code.n_bits && rank < rows.size(); ++col) {
    const std::uint32_t bit = 1u << col;
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && (rows[r] & bit)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rows.size() - rank;
}

}  // namespace polar
