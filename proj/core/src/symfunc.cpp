#include "sphom/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace sphom {

SymmetricFunction SymmetricFunction::one() {
  SymmetricFunction f;
  f.terms_.emplace(Partition(), Rational(1));
  return f;
}

SymmetricFunction SymmetricFunction::power_sum(unsigned k) {
  if (k == 0) throw std::invalid_argument("power_sum: k must be positive");
  SymmetricFunction f;
  f.terms_.emplace(Partition::unchecked({k}), Rational(1));
  return f;
}

SymmetricFunction SymmetricFunction::from_terms(
    std::vector<std::pair<Partition, Rational>> terms) {
  SymmetricFunction f;
  for (auto& [key, coeff] : terms) {
    f.add_term(std::move(key), coeff);
  }
  return f;
}

Rational SymmetricFunction::coefficient(const Partition& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymmetricFunction::add_term(const Partition& key, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void SymmetricFunction::add_term(Partition&& key, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<unsigned> SymmetricFunction::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  unsigned degree = terms_.begin()->first.degree();
  for (const auto& [key, coeff] : terms_) {
    if (key.degree() != degree) return std::nullopt;
  }
  return degree;
}

unsigned SymmetricFunction::max_degree() const {
  unsigned degree = 0;
  for (const auto& [key, coeff] : terms_) {
    degree = std::max(degree, key.degree());
  }
  return degree;
}

SymmetricFunction SymmetricFunction::homogeneous_part(unsigned degree) const {
  SymmetricFunction out;
  for (const auto& [key, coeff] : terms_) {
    if (key.degree() == degree) out.terms_.emplace(key, coeff);
  }
  return out;
}

std::vector<const std::pair<const Partition, Rational>*> SymmetricFunction::sorted_terms()
    const {
  std::vector<const std::pair<const Partition, Rational>*> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) out.push_back(&term);
  std::sort(out.begin(), out.end(),
            [](auto* a, auto* b) { return canonical_less(a->first, b->first); });
  return out;
}

SymmetricFunction& SymmetricFunction::operator+=(const SymmetricFunction& rhs) {
  for (const auto& [key, coeff] : rhs.terms_) add_term(key, coeff);
  return *this;
}

SymmetricFunction& SymmetricFunction::operator-=(const SymmetricFunction& rhs) {
  for (const auto& [key, coeff] : rhs.terms_) {
    Rational neg(coeff);
    mpq_neg(neg.get_mpq_t(), neg.get_mpq_t());
    add_term(key, neg);
  }
  return *this;
}

SymmetricFunction& SymmetricFunction::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= scalar;
  return *this;
}

SymmetricFunction operator*(const SymmetricFunction& lhs, const SymmetricFunction& rhs) {
  const SymmetricFunction& outer = lhs.term_count() >= rhs.term_count() ? lhs : rhs;
  const SymmetricFunction& inner = lhs.term_count() >= rhs.term_count() ? rhs : lhs;
  SymmetricFunction out;
  Rational product;
  std::vector<Partition::Part> scratch;
  for (const auto& [lkey, lcoeff] : outer.terms()) {
    for (const auto& [rkey, rcoeff] : inner.terms()) {
      scratch.resize(lkey.size() + rkey.size());
      std::merge(lkey.parts().begin(), lkey.parts().end(), rkey.parts().begin(),
                 rkey.parts().end(), scratch.begin(), std::greater<Partition::Part>());
      product = lcoeff * rcoeff;
      auto it = out.terms_.find(std::span<const Partition::Part>(scratch));
      if (it == out.terms_.end()) {
        out.terms_.emplace(Partition::unchecked(std::vector<Partition::Part>(scratch)),
                           std::move(product));
      } else {
        it->second += product;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

SymmetricFunction plethysm_power(unsigned r, const SymmetricFunction& f) {
  if (r == 0) throw std::invalid_argument("plethysm_power: r must be positive");
  SymmetricFunction out;
  for (const auto& [key, coeff] : f.terms()) {
    out.add_term(key.scaled(r), coeff);
  }
  return out;
}

SymmetricFunction exterior_plethysm(unsigned m, const SymmetricFunction& f) {
  auto degree = f.homogeneous_degree();
  if (!degree.has_value()) {
    throw std::invalid_argument("exterior_plethysm: argument must be homogeneous");
  }
  if (!f.is_zero() && *degree == 0) {
    throw std::invalid_argument("exterior_plethysm: argument must have degree >= 1");
  }
  std::vector<SymmetricFunction> e;
  e.reserve(m + 1);
  e.push_back(SymmetricFunction::one());
  if (m == 0) return e[0];
  std::vector<SymmetricFunction> powers(m + 1);
  for (unsigned r = 1; r <= m; ++r) powers[r] = plethysm_power(r, f);
  for (unsigned j = 1; j <= m; ++j) {
    SymmetricFunction acc;
    for (unsigned r = 1; r <= j; ++r) {
      SymmetricFunction term = powers[r] * e[j - r];
      if (r % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    acc *= make_rational(1, static_cast<long>(j));
    e.push_back(std::move(acc));
  }
  return e[m];
}

Rational hall_inner(const SymmetricFunction& f, const SymmetricFunction& g) {
  const SymmetricFunction& small = f.term_count() <= g.term_count() ? f : g;
  const SymmetricFunction& large = f.term_count() <= g.term_count() ? g : f;
  Rational acc(0);
  for (const auto& [key, coeff] : small.terms()) {
    auto it = large.terms().find(key);
    if (it != large.terms().end()) {
      acc += coeff * it->second * Rational(z_factor(key));
    }
  }
  return acc;
}

Rational specialize_dimension(const SymmetricFunction& f, unsigned variables) {
  if (variables == 0) throw std::invalid_argument("specialize_dimension: N must be positive");
  Rational acc(0);
  Integer n(variables);
  for (const auto& [key, coeff] : f.terms()) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), n.get_mpz_t(), key.size());
    acc += coeff * Rational(power);
  }
  return acc;
}

}  // namespace sphom
