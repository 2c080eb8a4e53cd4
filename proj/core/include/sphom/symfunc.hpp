#pragma once

#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sphom/numeric.hpp"
#include "sphom/partition.hpp"

namespace sphom {

// A symmetric function written in the power-sum basis: a sparse map
// from partitions lambda to exact rational coefficients of the
// monomial p_lambda = p_{lambda_1} p_{lambda_2} ... . Zero
// coefficients are never stored. This is the carrier of every
// GL-module character in the pipeline; products and plethysms are
// cheap in this basis, which is why it is the canonical one.
class SymmetricFunction {
 public:
  using TermMap = std::unordered_map<Partition, Rational, PartitionHash, PartitionEq>;

  SymmetricFunction() = default;

  static SymmetricFunction zero() { return {}; }

  // The degree-0 unit (coefficient 1 on the empty partition).
  static SymmetricFunction one();

  // p_k for k >= 1.
  static SymmetricFunction power_sum(unsigned k);

  static SymmetricFunction from_terms(std::vector<std::pair<Partition, Rational>> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // 0 when the partition carries no term.
  Rational coefficient(const Partition& key) const;

  // Accumulates into the term, erasing it when the sum vanishes.
  void add_term(const Partition& key, const Rational& coeff);
  void add_term(Partition&& key, const Rational& coeff);

  // The zero function is homogeneous of every degree; it reports
  // degree 0 here. Mixed-degree functions report nullopt.
  std::optional<unsigned> homogeneous_degree() const;
  bool is_homogeneous() const { return homogeneous_degree().has_value(); }

  unsigned max_degree() const;
  SymmetricFunction homogeneous_part(unsigned degree) const;

  // Terms in canonical partition order (degree, then descending lex).
  std::vector<const std::pair<const Partition, Rational>*> sorted_terms() const;

  SymmetricFunction& operator+=(const SymmetricFunction& rhs);
  SymmetricFunction& operator-=(const SymmetricFunction& rhs);
  SymmetricFunction& operator*=(const Rational& scalar);

  friend SymmetricFunction operator+(SymmetricFunction lhs, const SymmetricFunction& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend SymmetricFunction operator-(SymmetricFunction lhs, const SymmetricFunction& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend SymmetricFunction operator*(SymmetricFunction lhs, const Rational& scalar) {
    lhs *= scalar;
    return lhs;
  }

  // Power-sum basis product: keys merge as multisets, coefficients
  // multiply; bilinear.
  friend SymmetricFunction operator*(const SymmetricFunction& lhs,
                                     const SymmetricFunction& rhs);

  friend bool operator==(const SymmetricFunction& a, const SymmetricFunction& b) {
    return a.terms_ == b.terms_;
  }

 private:
  TermMap terms_;
};

// p_r o f: every key part scales by r, coefficients are untouched.
SymmetricFunction plethysm_power(unsigned r, const SymmetricFunction& f);

// e_m[f], the character of the m-th exterior power of the module with
// character f, by the Newton recurrence
//   m e_m[f] = sum_{r=1..m} (-1)^{r-1} p_r[f] e_{m-r}[f].
// f must be homogeneous of degree >= 1 (the pipeline never needs more).
SymmetricFunction exterior_plethysm(unsigned m, const SymmetricFunction& f);

// Hall inner product: sum over common keys of f_l * g_l * z_l. The
// power sums are orthogonal with <p_l, p_m> = z_l [l == m].
Rational hall_inner(const SymmetricFunction& f, const SymmetricFunction& g);

// Principal specialization p_i -> N, the dimension of the underlying
// GL_N-module when f is an honest character.
Rational specialize_dimension(const SymmetricFunction& f, unsigned variables);

}  // namespace sphom
