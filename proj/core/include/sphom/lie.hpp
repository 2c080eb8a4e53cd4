#pragma once

#include "sphom/numeric.hpp"
#include "sphom/symfunc.hpp"

namespace sphom {

// Character of the degree-k piece L_k(H) of the free Lie algebra on the
// fundamental representation H, by the Witt formula
//   ch L_k = (1/k) sum_{d | k} mu(d) p_d^{k/d}.
struct LieCharacter {
  unsigned k = 0;
  SymmetricFunction character;  // homogeneous of degree k
};

// Character of the degree-k derivation module
//   h+(k) = Ker( H (x) L_{k+1}(H) -> L_{k+2}(H) ),
// computed as p_1 * ch L_{k+1} - ch L_{k+2}. The subtraction is exact
// because the bracket is onto (free Lie algebras are generated in
// degree 1); Schur positivity of the result is asserted by the
// verification suite at small k rather than proved here.
struct DerivationCharacter {
  unsigned k = 0;
  SymmetricFunction character;  // homogeneous of degree k + 2
};

// Both are memoized process-wide; references stay valid for the
// lifetime of the process.
const LieCharacter& lie_character(unsigned k);
const DerivationCharacter& derivation_character(unsigned k);

// dim L_k of an N-dimensional space: (1/k) sum_{d | k} mu(d) N^{k/d}.
// Computed directly from the divisor sum, independent of the character
// machinery, so it can serve as its oracle.
Integer witt_dimension(unsigned k, unsigned n);

}  // namespace sphom
