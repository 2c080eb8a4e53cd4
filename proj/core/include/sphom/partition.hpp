#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sphom/numeric.hpp"

namespace sphom {

// An integer partition: weakly decreasing positive parts. The empty
// partition (degree 0) is the unique degree-0 value. Partitions index
// power-sum monomials, Schur functions and S_n conjugacy classes.
class Partition {
 public:
  using Part = std::uint32_t;

  Partition() = default;

  // Validates weak decrease and positivity.
  explicit Partition(std::vector<Part> parts);

  // Caller guarantees the invariant (used by generators and hot loops).
  static Partition unchecked(std::vector<Part> parts);

  const std::vector<Part>& parts() const { return parts_; }
  std::span<const Part> span() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  unsigned degree() const { return degree_; }

  // Multiplicity of each distinct part size, largest size first.
  std::vector<std::pair<Part, unsigned>> multiplicities() const;

  Partition conjugate() const;

  // True iff the conjugate partition has all parts even, i.e. every
  // column of the Young diagram has even length. Equivalent to
  // parts pairing up: lambda_1 = lambda_2, lambda_3 = lambda_4, ...
  bool has_even_conjugate() const;

  // Every part multiplied by r (the key map of the plethysm p_r o -).
  Partition scaled(unsigned r) const;

  // Multiset union of parts, kept sorted.
  static Partition merged(const Partition& a, const Partition& b);

  // "3,1,1"; the empty partition renders as "-".
  std::string to_string() const;
  static Partition from_string(std::string_view text);

  friend bool operator==(const Partition& a, const Partition& b) = default;

 private:
  std::vector<Part> parts_;
  unsigned degree_ = 0;
};

// Canonical order: by degree, then descending lexicographic on parts,
// so partitions_of(4) ranks [4] < [3,1] < [2,2] < [2,1,1] < [1,1,1,1].
bool canonical_less(const Partition& a, const Partition& b);

struct CanonicalLess {
  bool operator()(const Partition& a, const Partition& b) const {
    return canonical_less(a, b);
  }
};

struct PartitionHash {
  using is_transparent = void;
  std::size_t operator()(const Partition& p) const noexcept { return hash(p.span()); }
  std::size_t operator()(std::span<const Partition::Part> parts) const noexcept {
    return hash(parts);
  }
  static std::size_t hash(std::span<const Partition::Part> parts) noexcept;
};

struct PartitionEq {
  using is_transparent = void;
  bool operator()(const Partition& a, const Partition& b) const noexcept { return a == b; }
  bool operator()(const Partition& a, std::span<const Partition::Part> b) const noexcept {
    return std::ranges::equal(a.span(), b);
  }
  bool operator()(std::span<const Partition::Part> a, const Partition& b) const noexcept {
    return std::ranges::equal(a, b.span());
  }
};

// All partitions of n in canonical order; count is the partition
// function p(n). max_part caps the largest part when given.
std::vector<Partition> partitions_of(unsigned n,
                                     std::optional<unsigned> max_part = std::nullopt);

// Partition function by Euler's pentagonal-number recurrence. Serves as
// an enumeration-independent count oracle.
Integer partition_count(unsigned n);

// z_lambda = prod over distinct part sizes i of i^{m_i} * m_i!, the
// order of the centralizer of a permutation of cycle type lambda.
Integer z_factor(const Partition& p);

}  // namespace sphom
