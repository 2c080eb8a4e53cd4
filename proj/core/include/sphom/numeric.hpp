#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sphom {

// All arithmetic in this project is exact. Integer/Rational are
// arbitrary-precision GMP values; a Rational is always canonical
// (reduced, positive denominator).
using Integer = mpz_class;
using Rational = mpq_class;

// Raised when an exact computation produces a value that violates a
// structural guarantee (e.g. an Sp-invariant pairing that is not a
// non-negative integer). Always a bug in a character, never user input.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when two independent routes to the same quantity disagree
// (fused vs. materialized pairing, generating-function congruence, ...).
// Distinct from ComputationError so callers can report cross-check
// failures separately from broken computations.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(Integer num, Integer den) {
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer to_integer_exact(const Rational& q, const char* what = "value") {
  if (!is_integer(q)) {
    throw ComputationError(std::string(what) + " is not an integer: " + q.get_str());
  }
  return q.get_num();
}

// "n/d" with the denominator always spelled out, e.g. "-3/2", "7/1".
inline std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Strict inverse of rational_to_string: requires an explicit positive
// denominator and a fully reduced fraction.
Rational rational_from_string(std::string_view text);

Integer integer_from_string(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// Number-theoretic Moebius function, n >= 1.
int mobius(unsigned n);

}  // namespace sphom
