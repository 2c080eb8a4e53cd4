#include "sphom/characters.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace sphom {

namespace {

// First-column hook lengths ("beta numbers") of a shape padded to
// `rows` rows: beta_i = shape_i + rows - 1 - i, a strictly decreasing
// sequence. Removing a border strip of length r is subtracting r from
// one beta number such that the result stays non-negative and distinct;
// the strip height is the number of beta values jumped over.
std::vector<long> beta_numbers(const Partition& shape, std::size_t rows) {
  std::vector<long> beta(rows);
  const auto& parts = shape.parts();
  for (std::size_t i = 0; i < rows; ++i) {
    long part = i < parts.size() ? static_cast<long>(parts[i]) : 0;
    beta[i] = part + static_cast<long>(rows - 1 - i);
  }
  return beta;
}

Partition shape_from_beta(std::vector<long> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<long>());
  std::vector<Partition::Part> parts;
  const long rows = static_cast<long>(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    long part = beta[i] - (rows - 1 - static_cast<long>(i));
    if (part > 0) parts.push_back(static_cast<Partition::Part>(part));
  }
  return Partition::unchecked(std::move(parts));
}

}  // namespace

Integer CharacterTable::value(const Partition& shape, const Partition& cycle_type) {
  if (shape.degree() != cycle_type.degree()) {
    throw std::invalid_argument("character_value: |shape| != |cycle type|");
  }
  if (shape.empty()) return 1;
  auto key = std::make_pair(shape, cycle_type);
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  Integer result = compute(shape, cycle_type);
  {
    std::unique_lock lock(mutex_);
    memo_.emplace(std::move(key), result);
  }
  return result;
}

Integer CharacterTable::compute(const Partition& shape, const Partition& cycle_type) {
  const long strip = static_cast<long>(cycle_type.parts().front());
  Partition rest = Partition::unchecked(std::vector<Partition::Part>(
      cycle_type.parts().begin() + 1, cycle_type.parts().end()));

  std::vector<long> beta = beta_numbers(shape, shape.size());
  Integer total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    long lowered = beta[i] - strip;
    if (lowered < 0) continue;
    bool collision = false;
    unsigned height = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (j == i) continue;
      if (beta[j] == lowered) {
        collision = true;
        break;
      }
      if (beta[j] < beta[i] && beta[j] > lowered) ++height;
    }
    if (collision) continue;
    std::vector<long> reduced = beta;
    reduced[i] = lowered;
    Integer sub = value(shape_from_beta(std::move(reduced)), rest);
    if (height % 2 == 0) {
      total += sub;
    } else {
      total -= sub;
    }
  }
  return total;
}

std::size_t CharacterTable::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

CharacterTable& shared_character_table() {
  static CharacterTable table;
  return table;
}

Integer character_value(const Partition& shape, const Partition& cycle_type) {
  return shared_character_table().value(shape, cycle_type);
}

SchurExpansion schur_expand(const SymmetricFunction& f) {
  return schur_expand(f, shared_character_table());
}

SchurExpansion schur_expand(const SymmetricFunction& f, CharacterTable& table) {
  auto degree = f.homogeneous_degree();
  if (!degree.has_value()) {
    throw std::invalid_argument("schur_expand: argument must be homogeneous");
  }
  SchurExpansion out;
  if (f.is_zero()) return out;
  for (const Partition& lambda : partitions_of(*degree)) {
    Rational coeff(0);
    for (const auto& [mu, c] : f.terms()) {
      coeff += c * Rational(table.value(lambda, mu));
    }
    if (coeff != 0) out.emplace(lambda, std::move(coeff));
  }
  return out;
}

}  // namespace sphom
