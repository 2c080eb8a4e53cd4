#pragma once

#include <filesystem>
#include <map>
#include <vector>

#include "sphom/numeric.hpp"

namespace sphom {

// Per-weight Euler characteristics chi_w of the invariant chain
// complex, keyed by even weight w >= 2.
using ChiTable = std::map<unsigned, Integer>;

// One extraction step: rank n contributes the factor
// (1 - t^{2n-2})^{-e_n} to the weight generating function
//   h(t) = 1 + sum_w chi_w t^w = prod_{n>=2} (1 - t^{2n-2})^{-e_n},
// so e_n = e(Out F_n) falls out degree by degree.
struct EulerRow {
  unsigned n = 0;
  unsigned weight = 0;  // 2n - 2
  Integer chi;          // chi_weight
  Integer lower;        // [t^weight] of the product over ranks < n
  Integer primitive;    // e(Out F_n) = chi - lower
};

using EulerTable = std::vector<EulerRow>;

// Exact coefficients of prod_n (1 - t^{2n-2})^{-e_n} through t^max_degree.
// Negative exponents multiply by (1 - t^{2n-2})^{|e_n|} instead.
std::vector<Integer> expand_product(const std::map<unsigned, Integer>& exponents,
                                    unsigned max_degree);

// Runs the extraction over a chi table covering every even weight
// 2..W with no gaps; a gap or an odd/sub-2 key is rejected.
EulerTable extract_out_euler(const ChiTable& chi);

struct CongruenceReport {
  bool ok = true;
  unsigned first_mismatch = 0;  // lowest disagreeing degree when !ok
};

// Re-expands the extracted exponents and compares against
// (1, 0, chi_2, 0, chi_4, ...) through the table's top weight.
CongruenceReport verify_congruence(const ChiTable& chi, const EulerTable& table);

// "w,chi" CSV with a header row; strict integer parsing.
ChiTable read_chi_csv(const std::filesystem::path& path);

}  // namespace sphom
