#pragma once

#include <map>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

#include "sphom/partition.hpp"
#include "sphom/symfunc.hpp"

namespace sphom {

// Memoized Murnaghan-Nakayama evaluator for irreducible symmetric-group
// characters chi^shape(cycle_type). The recursion strips a border strip
// of the largest remaining cycle length and signs it by (-1)^height.
//
// The memo table is keyed by (remaining shape, remaining cycle type) and
// behaves as a write-once concurrent map: duplicated computation is
// permitted and always yields the same value.
class CharacterTable {
 public:
  // Requires |shape| == |cycle_type|.
  Integer value(const Partition& shape, const Partition& cycle_type);

  std::size_t memo_size() const;

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<Partition, Partition>& k) const noexcept {
      std::size_t a = PartitionHash{}(k.first);
      std::size_t b = PartitionHash{}(k.second);
      return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
    }
  };

  Integer compute(const Partition& shape, const Partition& cycle_type);

  std::unordered_map<std::pair<Partition, Partition>, Integer, KeyHash> memo_;
  mutable std::shared_mutex mutex_;
};

// chi^shape(cycle_type) through a process-wide shared table.
Integer character_value(const Partition& shape, const Partition& cycle_type);

CharacterTable& shared_character_table();

using SchurExpansion = std::map<Partition, Rational, CanonicalLess>;

// All Schur coefficients <f, s_lambda> of a homogeneous f, via
// <p_mu, s_lambda> = chi^lambda(mu). Honest module characters expand
// with non-negative integer coefficients. Zero coefficients are omitted.
SchurExpansion schur_expand(const SymmetricFunction& f);
SchurExpansion schur_expand(const SymmetricFunction& f, CharacterTable& table);

}  // namespace sphom
