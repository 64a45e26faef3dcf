#ifndef POLAR_BEC_SYMBOLIC_HPP
#define POLAR_BEC_SYMBOLIC_HPP

#include <cstdint>
#include <vector>

#include "polar/code.hpp"

namespace polar {

/// Three-valued BEC LLR: +1 = known zero, -1 = known one, 0 = erased.
using Ternary = std::int8_t;
using TernaryVector = std::vector<Ternary>;

/// Channel observation of codeword x under an erasure pattern
/// (erased[i] != 0 means position i was erased).
TernaryVector bec_observe(const BitVector& x,
                          const std::vector<std::uint8_t>& erased);

struct SymbolicSclResult {
  bool success = false;  // single survivor equal to the true input
  std::size_t final_paths = 0;
  std::size_t peak_paths = 0;
  std::size_t peak_before_last_frozen = 0;  // 0 when the code has no frozen bit
  std::size_t doublings = 0;                // forks at erased info leaves
  std::size_t cancellations = 0;            // paths killed by known evidence
};

/// Symbolic SCL over the BEC. Paths fork exactly at non-frozen leaves whose
/// LLR is erased; evidence that contradicts a path (a frozen leaf decoding
/// to one, or conflicting branches inside g) cancels it. All survivors are
/// equally likely, so success requires a unique survivor matching true_u.
/// list_cap = 0 decodes without a list bound (pure MAP behaviour).
SymbolicSclResult bec_symbolic_scl(const PolarCode& code,
                                   const TernaryVector& channel,
                                   const BitVector& true_u,
                                   std::size_t list_cap);

/// log2 of the number of input vectors consistent with the unerased
/// positions (the MAP ambiguity). 0 means the MAP decoder succeeds.
std::size_t bec_map_ambiguity_exponent(const PolarCode& code,
                                       const std::vector<std::uint8_t>& erased);

}  // namespace polar

#endif
