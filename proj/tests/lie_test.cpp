#include "doctest.h"

#include "sphom/characters.hpp"
#include "sphom/lie.hpp"
#include "sphom/symfunc.hpp"

using namespace sphom;

TEST_CASE("low-degree free Lie characters in closed form") {
  CHECK(lie_character(1).character == SymmetricFunction::power_sum(1));

  // ch L_2 = (p_1^2 - p_2)/2 = e_2.
  CHECK(lie_character(2).character ==
        exterior_plethysm(2, SymmetricFunction::power_sum(1)));

  // ch L_6 = (p_1^6 - p_2^3 - p_3^2 + p_6)/6, straight from the Witt sum.
  const SymmetricFunction l6 = lie_character(6).character;
  CHECK(l6.term_count() == 4);
  CHECK(l6.coefficient(Partition({1, 1, 1, 1, 1, 1})) == make_rational(1, 6));
  CHECK(l6.coefficient(Partition({2, 2, 2})) == make_rational(-1, 6));
  CHECK(l6.coefficient(Partition({3, 3})) == make_rational(-1, 6));
  CHECK(l6.coefficient(Partition({6})) == make_rational(1, 6));
}

TEST_CASE("lie characters are homogeneous of degree k") {
  for (unsigned k = 1; k <= 12; ++k) {
    CHECK(lie_character(k).k == k);
    CHECK(lie_character(k).character.homogeneous_degree() == k);
  }
}

TEST_CASE("witt dimensions: frozen values and divisor-sum identity") {
  CHECK(witt_dimension(1, 2) == 2);
  CHECK(witt_dimension(2, 2) == 1);
  CHECK(witt_dimension(3, 2) == 2);
  CHECK(witt_dimension(6, 2) == 9);
  CHECK(witt_dimension(12, 3) == 44220);

  // N^k counts all words; Lie dimensions of lower degree resolve them:
  // N^k = sum_{d | k} d * dim L_d(N) (necklace/Witt identity).
  for (unsigned k = 1; k <= 10; ++k) {
    for (unsigned n = 1; n <= 4; ++n) {
      Integer words = 0;
      for (unsigned d = 1; d <= k; ++d) {
        if (k % d == 0) words += Integer(d) * witt_dimension(d, n);
      }
      Integer power;
      mpz_ui_pow_ui(power.get_mpz_t(), n, k);
      CHECK(words == power);
    }
  }
}

TEST_CASE("character specialization reproduces witt dimensions") {
  for (unsigned k = 1; k <= 10; ++k) {
    for (unsigned n = 1; n <= 5; ++n) {
      CHECK(specialize_dimension(lie_character(k).character, n) ==
            Rational(witt_dimension(k, n)));
    }
  }
}

TEST_CASE("derivation characters: degree, closed form, Schur content") {
  for (unsigned k = 1; k <= 10; ++k) {
    CHECK(derivation_character(k).character.homogeneous_degree() == k + 2);
  }

  // f_1 = p_1 ch L_2 - ch L_3 = p_1^3/6 - p_{2,1}/2 + p_3/3.
  const SymmetricFunction f1 = derivation_character(1).character;
  CHECK(f1.term_count() == 3);
  CHECK(f1.coefficient(Partition({1, 1, 1})) == make_rational(1, 6));
  CHECK(f1.coefficient(Partition({2, 1})) == make_rational(-1, 2));
  CHECK(f1.coefficient(Partition({3})) == make_rational(1, 3));

  // The two smallest derivation modules are single Schur functions.
  const SchurExpansion s1 = schur_expand(f1);
  REQUIRE(s1.size() == 1);
  CHECK(s1.at(Partition({1, 1, 1})) == 1);

  const SchurExpansion s2 = schur_expand(derivation_character(2).character);
  REQUIRE(s2.size() == 1);
  CHECK(s2.at(Partition({2, 2})) == 1);
}

TEST_CASE("degree zero is rejected everywhere") {
  CHECK_THROWS_AS(lie_character(0), std::invalid_argument);
  CHECK_THROWS_AS(derivation_character(0), std::invalid_argument);
  CHECK_THROWS_AS(witt_dimension(0, 3), std::invalid_argument);
}

TEST_CASE("memoized references are stable and consistent") {
  const SymmetricFunction* first = &lie_character(5).character;
  lie_character(9);
  derivation_character(7);
  CHECK(first == &lie_character(5).character);
  CHECK(*first == lie_character(5).character);
}
