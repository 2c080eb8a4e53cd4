#include "sphom/outer_euler.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sphom {

namespace {

// In-place product with (1 - t^stride)^{-exponent} mod t^{size}: a
// convolution with the binomial series
//   (1 - t^s)^c = sum_j (-1)^j binom(c, j) t^{s j},   c = -exponent.
// The signed coefficients build up through the exact ratio
// d_j = d_{j-1} (j - 1 - c) / j, so the cost never depends on the
// magnitude of the exponent (extracted exponents can be huge). For
// negative c the series is the plain geometric-power expansion; for
// positive c it terminates on its own once j exceeds c.
void apply_factor(std::vector<Integer>& coeffs, unsigned stride, const Integer& exponent) {
  std::size_t size = coeffs.size();
  if (stride == 0 || stride >= size || exponent == 0) return;

  std::size_t max_j = (size - 1) / stride;
  std::vector<Integer> series(max_j + 1);
  series[0] = 1;
  Integer c = -exponent;
  for (std::size_t j = 1; j <= max_j; ++j) {
    series[j] = series[j - 1] * (Integer(j - 1) - c);
    mpz_divexact_ui(series[j].get_mpz_t(), series[j].get_mpz_t(), j);
  }

  std::vector<Integer> out(size, Integer(0));
  for (std::size_t i = 0; i < size; ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t j = 0; i + j * stride < size; ++j) {
      if (series[j] != 0) out[i + j * stride] += coeffs[i] * series[j];
    }
  }
  coeffs = std::move(out);
}

}  // namespace

std::vector<Integer> expand_product(const std::map<unsigned, Integer>& exponents,
                                    unsigned max_degree) {
  std::vector<Integer> coeffs(max_degree + 1, Integer(0));
  coeffs[0] = 1;
  for (const auto& [n, exponent] : exponents) {
    if (n < 2) throw std::invalid_argument("expand_product: rank must be >= 2");
    apply_factor(coeffs, 2 * n - 2, exponent);
  }
  return coeffs;
}

namespace {

unsigned checked_top_weight(const ChiTable& chi) {
  if (chi.empty()) return 0;
  unsigned expected = 2;
  for (const auto& [w, value] : chi) {
    if (w % 2 != 0 || w < 2) {
      throw std::invalid_argument("chi table: weight " + std::to_string(w) +
                                  " is not an even weight >= 2");
    }
    if (w != expected) {
      throw std::invalid_argument("chi table: gap at weight " + std::to_string(expected) +
                                  " (next supplied weight is " + std::to_string(w) + ")");
    }
    expected += 2;
  }
  return chi.rbegin()->first;
}

}  // namespace

EulerTable extract_out_euler(const ChiTable& chi) {
  unsigned top = checked_top_weight(chi);
  EulerTable table;
  if (top == 0) return table;

  // Grow the product one factor at a time: entering rank n, `coeffs`
  // holds the expansion over all ranks < n, whose t^{2n-2} coefficient
  // is exactly the lower-terms contribution.
  std::vector<Integer> coeffs(top + 1, Integer(0));
  coeffs[0] = 1;
  for (unsigned n = 2; 2 * n - 2 <= top; ++n) {
    unsigned w = 2 * n - 2;
    EulerRow row;
    row.n = n;
    row.weight = w;
    row.chi = chi.at(w);
    row.lower = coeffs[w];
    row.primitive = row.chi - row.lower;
    apply_factor(coeffs, w, row.primitive);
    table.push_back(std::move(row));
  }
  return table;
}

CongruenceReport verify_congruence(const ChiTable& chi, const EulerTable& table) {
  unsigned top = checked_top_weight(chi);
  std::map<unsigned, Integer> exponents;
  for (const EulerRow& row : table) exponents.emplace(row.n, row.primitive);
  std::vector<Integer> coeffs = expand_product(exponents, top);

  for (unsigned d = 0; d <= top; ++d) {
    Integer expected = 0;
    if (d == 0) {
      expected = 1;
    } else if (d % 2 == 0) {
      expected = chi.at(d);
    }
    if (coeffs[d] != expected) return CongruenceReport{false, d};
  }
  return CongruenceReport{true, 0};
}

namespace {

unsigned parse_weight(std::string_view field, unsigned line_no) {
  unsigned value = 0;
  auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || end != field.data() + field.size()) {
    throw std::invalid_argument("chi csv line " + std::to_string(line_no) +
                                ": bad weight '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

ChiTable read_chi_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open chi file: " + path.string());

  ChiTable chi;
  std::string line;
  unsigned line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != "w,chi") {
        throw std::invalid_argument("chi csv: expected header 'w,chi', got '" + line + "'");
      }
      continue;
    }
    auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("chi csv line " + std::to_string(line_no) +
                                  ": expected 'w,chi', got '" + line + "'");
    }
    unsigned w = parse_weight(std::string_view(line).substr(0, comma), line_no);
    Integer value;
    try {
      value = integer_from_string(std::string_view(line).substr(comma + 1));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("chi csv line " + std::to_string(line_no) +
                                  ": bad integer '" + line.substr(comma + 1) + "'");
    }
    if (!chi.emplace(w, std::move(value)).second) {
      throw std::invalid_argument("chi csv line " + std::to_string(line_no) +
                                  ": duplicate weight " + std::to_string(w));
    }
  }
  if (line_no == 0) throw std::invalid_argument("chi csv: empty file " + path.string());
  if (chi.empty()) throw std::invalid_argument("chi csv: no data rows in " + path.string());
  return chi;
}

}  // namespace sphom
