#include "sphom/littlewood.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace sphom {

const SymmetricFunction& LittlewoodSeries::part(unsigned degree) {
  std::lock_guard lock(mutex_);
  extend(degree);
  return parts_.at(degree);
}

InvariantSeries LittlewoodSeries::up_to(unsigned max_degree) {
  std::lock_guard lock(mutex_);
  extend(max_degree);
  InvariantSeries out;
  out.max_degree = max_degree;
  for (unsigned d = 0; d <= max_degree; ++d) out.series += parts_.at(d);
  return out;
}

unsigned LittlewoodSeries::max_computed() const {
  std::lock_guard lock(mutex_);
  return parts_.empty() ? 0 : parts_.rbegin()->first;
}

void LittlewoodSeries::extend(unsigned degree) {
  if (parts_.empty()) {
    parts_.emplace(0u, SymmetricFunction::one());
  }
  for (unsigned d = parts_.rbegin()->first + 1; d <= degree; ++d) {
    if (d % 2 == 1) {
      parts_.emplace(d, SymmetricFunction::zero());
      continue;
    }
    SymmetricFunction acc;
    for (unsigned m = 1; 2 * m <= d; ++m) {
      SymmetricFunction factor;
      factor.add_term(Partition::unchecked({m, m}), Rational(1));
      factor.add_term(Partition::unchecked({2 * m}), Rational(-1));
      acc += factor * parts_.at(d - 2 * m);
    }
    acc *= make_rational(1, static_cast<long>(d));
    parts_.emplace(d, std::move(acc));
  }
}

LittlewoodSeries& shared_littlewood_series() {
  static LittlewoodSeries series;
  return series;
}

InvariantSeries littlewood_series(unsigned max_degree) {
  if (max_degree < 2 || max_degree % 2 != 0) {
    throw std::invalid_argument("littlewood_series: max_degree must be even and >= 2");
  }
  return shared_littlewood_series().up_to(max_degree);
}

InvariantWeights::InvariantWeights(unsigned max_degree) : max_degree_(max_degree) {
  table_.resize(max_degree + 1);
  for (unsigned j = 1; j <= max_degree; ++j) {
    unsigned max_mult = max_degree / j;
    auto& row = table_[j];
    row.resize(max_mult + 1);
    row[0] = 1;
    for (unsigned r = 1; r <= max_mult; ++r) {
      if (j % 2 == 1) {
        if (r % 2 == 1) {
          row[r] = 0;
        } else {
          // j^a (2a-1)!! for r = 2a
          unsigned a = r / 2;
          Integer v = factorial(r) / (Integer(1) << a) / factorial(a);
          Integer jp;
          mpz_ui_pow_ui(jp.get_mpz_t(), j, a);
          row[r] = v * jp;
        }
      } else {
        Integer acc = 0;
        for (unsigned a = 0; 2 * a <= r; ++a) {
          Integer term = factorial(r) / (Integer(1) << a) / factorial(a) / factorial(r - 2 * a);
          Integer jp;
          mpz_ui_pow_ui(jp.get_mpz_t(), j, a);
          acc += term * jp;
        }
        row[r] = (r % 2 == 0) ? acc : -acc;
      }
    }
  }
}

const Integer& InvariantWeights::operator()(unsigned part, unsigned multiplicity) const {
  return table_[part][multiplicity];
}

Integer InvariantWeights::weight(const Partition& key) const {
  Integer acc = 1;
  const auto& parts = key.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const Integer& factor = table_[parts[i]][j - i];
    if (factor == 0) return Integer(0);
    acc *= factor;
    i = j;
  }
  return acc;
}

namespace {

// Parity of the multiplicity of each odd part size, folded into a
// 64-bit bucket id. Merging partitions XORs signatures, so a merged key
// can only carry nonzero weight when both sides share a signature.
// Collisions beyond 64 distinct odd sizes only cost a zero-weight
// evaluation, never correctness.
std::uint64_t odd_parity_signature(const Partition& key) {
  std::uint64_t sig = 0;
  for (auto [part, mult] : key.multiplicities()) {
    if (part % 2 == 1 && mult % 2 == 1) {
      sig ^= std::uint64_t(1) << (((part - 1) / 2) % 64);
    }
  }
  return sig;
}

}  // namespace

Rational littlewood_pair(const SymmetricFunction& f, const InvariantWeights& weights) {
  Rational acc(0);
  for (const auto& [key, coeff] : f.terms()) {
    Integer w = weights.weight(key);
    if (w == 0) continue;
    acc += coeff * Rational(std::move(w));
  }
  return acc;
}

Rational littlewood_pair_product(const SymmetricFunction& f, const SymmetricFunction& g,
                                 const InvariantWeights& weights) {
  const SymmetricFunction& small = f.term_count() <= g.term_count() ? f : g;
  const SymmetricFunction& large = f.term_count() <= g.term_count() ? g : f;

  using Term = std::pair<const Partition, Rational>;
  std::unordered_map<std::uint64_t, std::vector<const Term*>> buckets;
  for (const auto& term : small.terms()) {
    buckets[odd_parity_signature(term.first)].push_back(&term);
  }

  Rational acc(0);
  Integer w;
  for (const auto& [lkey, lcoeff] : large.terms()) {
    auto bucket = buckets.find(odd_parity_signature(lkey));
    if (bucket == buckets.end()) continue;
    for (const Term* term : bucket->second) {
      const Partition& rkey = term->first;
      // Merged multiplicity runs over both sorted part lists.
      w = 1;
      const auto& a = lkey.parts();
      const auto& b = rkey.parts();
      std::size_t i = 0, j = 0;
      while (i < a.size() || j < b.size()) {
        Partition::Part size;
        if (j == b.size() || (i < a.size() && a[i] >= b[j])) {
          size = a[i];
        } else {
          size = b[j];
        }
        unsigned mult = 0;
        while (i < a.size() && a[i] == size) ++i, ++mult;
        while (j < b.size() && b[j] == size) ++j, ++mult;
        const Integer& factor = weights(size, mult);
        if (factor == 0) {
          w = 0;
          break;
        }
        w *= factor;
      }
      if (w == 0) continue;
      acc += lcoeff * term->second * Rational(w);
    }
  }
  return acc;
}

namespace {

Integer checked_invariant_dim(Rational value, const char* what) {
  Integer dim = to_integer_exact(value, what);
  if (dim < 0) {
    throw ComputationError(std::string(what) + " is negative: " + dim.get_str());
  }
  return dim;
}

}  // namespace

Integer sp_invariant_dim(const SymmetricFunction& f) {
  return sp_invariant_dim(f, shared_littlewood_series());
}

Integer sp_invariant_dim(const SymmetricFunction& f, LittlewoodSeries& series) {
  auto degree = f.homogeneous_degree();
  if (!degree.has_value()) {
    throw std::invalid_argument("sp_invariant_dim: argument must be homogeneous");
  }
  if (*degree % 2 == 1) return 0;
  return checked_invariant_dim(hall_inner(f, series.part(*degree)),
                               "sp_invariant_dim pairing");
}

Integer sp_invariant_dim_oracle(const SymmetricFunction& f) {
  return sp_invariant_dim_oracle(f, shared_character_table());
}

Integer sp_invariant_dim_oracle(const SymmetricFunction& f, CharacterTable& table) {
  auto degree = f.homogeneous_degree();
  if (!degree.has_value()) {
    throw std::invalid_argument("sp_invariant_dim_oracle: argument must be homogeneous");
  }
  Rational acc(0);
  for (const Partition& lambda : even_conjugate_partitions(*degree)) {
    for (const auto& [mu, coeff] : f.terms()) {
      acc += coeff * Rational(table.value(lambda, mu));
    }
  }
  return checked_invariant_dim(std::move(acc), "sp_invariant_dim_oracle sum");
}

std::vector<Partition> even_conjugate_partitions(unsigned n) {
  std::vector<Partition> out;
  if (n % 2 != 0) return out;
  for (const Partition& half : partitions_of(n / 2)) {
    std::vector<Partition::Part> doubled;
    doubled.reserve(2 * half.size());
    for (Partition::Part p : half.parts()) {
      doubled.push_back(p);
      doubled.push_back(p);
    }
    out.push_back(Partition::unchecked(std::move(doubled)));
  }
  return out;
}

}  // namespace sphom
