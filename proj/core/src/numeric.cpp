#include "sphom/numeric.hpp"

namespace sphom {

Integer integer_from_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("integer_from_string: empty");
  try {
    return Integer(std::string(text), 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("integer_from_string: bad integer '" + std::string(text) + "'");
  }
}

Rational rational_from_string(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw std::invalid_argument("rational_from_string: missing '/' in '" + std::string(text) + "'");
  }
  Integer num = integer_from_string(text.substr(0, slash));
  Integer den = integer_from_string(text.substr(slash + 1));
  if (den <= 0) {
    throw std::invalid_argument("rational_from_string: denominator must be positive in '" +
                                std::string(text) + "'");
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) {
    throw std::invalid_argument("rational_from_string: fraction not reduced in '" +
                                std::string(text) + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

int mobius(unsigned n) {
  if (n == 0) throw std::invalid_argument("mobius: n must be positive");
  int result = 1;
  unsigned m = n;
  for (unsigned p = 2; static_cast<unsigned long long>(p) * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return 0;
      result = -result;
    }
  }
  if (m > 1) result = -result;
  return result;
}

}  // namespace sphom
