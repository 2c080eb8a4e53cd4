#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "sphom/characters.hpp"
#include "sphom/numeric.hpp"
#include "sphom/symfunc.hpp"

namespace sphom {

// Truncation of the Littlewood series
//   B = sum over lambda with even conjugate of s_lambda
//     = exp( sum_{m>=1} (p_m^2 - p_{2m}) / (2m) ),
// the generating function of stable Sp-invariants: for a GL-character f
// the stable invariant dimension is the Hall pairing <f, B>.
struct InvariantSeries {
  unsigned max_degree = 0;
  SymmetricFunction series;  // all homogeneous parts of degree <= max_degree
};

// Materialized, incrementally extendable cache of the homogeneous parts
// B_d, computed degree by degree from d B_d = sum_m (p_m^2 - p_{2m}) B_{d-2m}.
// Odd-degree parts vanish identically.
class LittlewoodSeries {
 public:
  // Reference remains valid for the lifetime of the series object.
  const SymmetricFunction& part(unsigned degree);

  InvariantSeries up_to(unsigned max_degree);

  unsigned max_computed() const;

 private:
  void extend(unsigned degree);

  std::map<unsigned, SymmetricFunction> parts_;
  mutable std::mutex mutex_;
};

LittlewoodSeries& shared_littlewood_series();

// sum of all parts of the shared series up to max_degree (>= 2, even).
InvariantSeries littlewood_series(unsigned max_degree);

// z_lambda-weighted coefficients of the Littlewood series in closed
// form: <p_lambda, B> = prod over part sizes j of table(j, m_j(lambda)).
// Per size j the factor is
//   j odd:  0 for odd multiplicity, j^a (2a-1)!! for multiplicity 2a
//   j even: (-1)^r sum_a j^a r! / (2^a a! (r-2a)!) for multiplicity r.
// Derived from the exponential form of B; the verification suite checks
// it against the materialized series term by term.
class InvariantWeights {
 public:
  explicit InvariantWeights(unsigned max_degree);

  unsigned max_degree() const { return max_degree_; }

  // table(part, multiplicity); part * multiplicity must be <= max_degree.
  const Integer& operator()(unsigned part, unsigned multiplicity) const;

  // <p_lambda, B> as the product over multiplicity runs.
  Integer weight(const Partition& key) const;

 private:
  unsigned max_degree_;
  std::vector<std::vector<Integer>> table_;  // [part][multiplicity]
};

// <f, B> evaluated against the closed-form weights.
Rational littlewood_pair(const SymmetricFunction& f, const InvariantWeights& weights);

// <f * g, B> without materializing the product: pairs of keys merge
// multiplicity-wise under the factored weights. Keys whose merged odd
// part sizes retain an odd multiplicity pair to zero and are skipped
// wholesale via a parity-signature bucket index.
Rational littlewood_pair_product(const SymmetricFunction& f, const SymmetricFunction& g,
                                 const InvariantWeights& weights);

// Stable Sp-invariant dimension of a homogeneous character: the Hall
// pairing of f with the materialized Littlewood series at matching
// degree. A non-integer or negative pairing signals a corrupted
// character and raises ComputationError.
Integer sp_invariant_dim(const SymmetricFunction& f);
Integer sp_invariant_dim(const SymmetricFunction& f, LittlewoodSeries& series);

// Independent oracle for the same quantity: Schur-expand f through
// Murnaghan-Nakayama characters and count coefficients on partitions
// whose conjugate has all parts even.
Integer sp_invariant_dim_oracle(const SymmetricFunction& f);
Integer sp_invariant_dim_oracle(const SymmetricFunction& f, CharacterTable& table);

// Partitions of n whose conjugate has all parts even: exactly the
// shapes (a,a,b,b,...) obtained by doubling each part multiplicity of a
// partition of n/2. Empty for odd n.
std::vector<Partition> even_conjugate_partitions(unsigned n);

}  // namespace sphom
