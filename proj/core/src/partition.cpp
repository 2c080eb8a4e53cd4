#include "sphom/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace sphom {

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) {
      throw std::invalid_argument("Partition: parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    degree_ += parts_[i];
  }
}

Partition Partition::unchecked(std::vector<Part> parts) {
  Partition p;
  p.parts_ = std::move(parts);
  p.degree_ = std::accumulate(p.parts_.begin(), p.parts_.end(), 0u);
  return p;
}

std::vector<std::pair<Partition::Part, unsigned>> Partition::multiplicities() const {
  std::vector<std::pair<Part, unsigned>> out;
  std::size_t i = 0;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    out.emplace_back(parts_[i], static_cast<unsigned>(j - i));
    i = j;
  }
  return out;
}

Partition Partition::conjugate() const {
  std::vector<Part> cols;
  if (!parts_.empty()) {
    cols.resize(parts_[0]);
    for (Part p : parts_) {
      for (Part c = 0; c < p; ++c) ++cols[c];
    }
  }
  return unchecked(std::move(cols));
}

bool Partition::has_even_conjugate() const {
  if (parts_.size() % 2 != 0) return false;
  for (std::size_t i = 0; i + 1 < parts_.size(); i += 2) {
    if (parts_[i] != parts_[i + 1]) return false;
  }
  return true;
}

Partition Partition::scaled(unsigned r) const {
  std::vector<Part> out(parts_);
  for (Part& p : out) p *= r;
  Partition q;
  q.parts_ = std::move(out);
  q.degree_ = degree_ * r;
  return q;
}

Partition Partition::merged(const Partition& a, const Partition& b) {
  std::vector<Part> out;
  out.resize(a.size() + b.size());
  std::merge(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
             out.begin(), std::greater<Part>());
  Partition p;
  p.parts_ = std::move(out);
  p.degree_ = a.degree_ + b.degree_;
  return p;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::from_string(std::string_view text) {
  if (text == "-") return Partition();
  std::vector<Part> parts;
  const char* p = text.data();
  const char* end = text.data() + text.size();
  while (p < end) {
    Part value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || value == 0) {
      throw std::invalid_argument("Partition::from_string: bad part in '" +
                                  std::string(text) + "'");
    }
    parts.push_back(value);
    p = next;
    if (p < end) {
      if (*p != ',') {
        throw std::invalid_argument("Partition::from_string: expected ',' in '" +
                                    std::string(text) + "'");
      }
      ++p;
      if (p == end) {
        throw std::invalid_argument("Partition::from_string: trailing ',' in '" +
                                    std::string(text) + "'");
      }
    }
  }
  return Partition(std::move(parts));  // re-validates ordering
}

bool canonical_less(const Partition& a, const Partition& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}

std::size_t PartitionHash::hash(std::span<const Partition::Part> parts) noexcept {
  // FNV-1a over the part values.
  std::uint64_t h = 1469598103934665603ull;
  for (Partition::Part p : parts) {
    h ^= p;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

namespace {

void emit_partitions(unsigned n, unsigned max_part, std::vector<Partition::Part>& stack,
                     std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition::unchecked(stack));
    return;
  }
  for (unsigned first = std::min(n, max_part); first >= 1; --first) {
    stack.push_back(first);
    emit_partitions(n - first, first, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned n, std::optional<unsigned> max_part) {
  std::vector<Partition> out;
  unsigned cap = max_part.value_or(n);
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  if (cap == 0) return out;
  std::vector<Partition::Part> stack;
  emit_partitions(n, cap, stack, out);
  return out;
}

Integer partition_count(unsigned n) {
  // p(n) = sum_{k>=1} (-1)^{k-1} [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ]
  std::vector<Integer> p(n + 1);
  p[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Integer acc = 0;
    for (unsigned k = 1;; ++k) {
      unsigned g1 = k * (3 * k - 1) / 2;
      unsigned g2 = k * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      int sign = (k % 2 == 1) ? 1 : -1;
      if (g1 <= m) acc += sign * p[m - g1];
      if (g2 <= m) acc += sign * p[m - g2];
    }
    p[m] = acc;
  }
  return p[n];
}

Integer z_factor(const Partition& p) {
  Integer z = 1;
  for (auto [part, mult] : p.multiplicities()) {
    for (unsigned i = 1; i <= mult; ++i) {
      z *= part * Integer(i);
    }
  }
  return z;
}

}  // namespace sphom
