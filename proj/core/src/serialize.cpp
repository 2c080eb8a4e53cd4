#include "sphom/serialize.hpp"

#include <charconv>
#include <stdexcept>

#include "sphom/version.hpp"

namespace sphom {

namespace {

unsigned parse_unsigned_field(std::string_view line, std::string_view key) {
  auto pos = line.find(key);
  if (pos == std::string_view::npos) {
    throw std::invalid_argument("SYMFUNC: missing header field '" + std::string(key) + "'");
  }
  const char* begin = line.data() + pos + key.size();
  const char* end = line.data() + line.size();
  unsigned value = 0;
  auto [next, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || next == begin) {
    throw std::invalid_argument("SYMFUNC: bad header field '" + std::string(key) + "'");
  }
  return value;
}

}  // namespace

std::string symfunc_to_text(const SymmetricFunction& f) {
  std::string out = std::string(kSymfuncFormat) + " degree=" +
                    std::to_string(f.max_degree()) + " terms=" +
                    std::to_string(f.term_count()) + "\n";
  for (const auto* term : f.sorted_terms()) {
    out += term->first.to_string();
    out += ": ";
    out += rational_to_string(term->second);
    out += '\n';
  }
  return out;
}

SymmetricFunction symfunc_from_text(std::string_view text) {
  auto next_line = [&text]() -> std::string_view {
    auto nl = text.find('\n');
    if (nl == std::string_view::npos) {
      auto line = text;
      text = {};
      return line;
    }
    auto line = text.substr(0, nl);
    text.remove_prefix(nl + 1);
    return line;
  };

  std::string_view header = next_line();
  std::string_view magic(kSymfuncFormat);
  if (header.substr(0, magic.size()) != magic) {
    throw std::invalid_argument("SYMFUNC: bad magic line");
  }
  unsigned degree = parse_unsigned_field(header, "degree=");
  unsigned terms = parse_unsigned_field(header, "terms=");

  SymmetricFunction f;
  Partition previous;
  bool has_previous = false;
  unsigned max_degree = 0;
  for (unsigned i = 0; i < terms; ++i) {
    if (text.empty()) throw std::invalid_argument("SYMFUNC: truncated term list");
    std::string_view line = next_line();
    auto sep = line.find(": ");
    if (sep == std::string_view::npos) {
      throw std::invalid_argument("SYMFUNC: bad term line '" + std::string(line) + "'");
    }
    Partition key = Partition::from_string(line.substr(0, sep));
    Rational coeff = rational_from_string(line.substr(sep + 2));
    if (coeff == 0) throw std::invalid_argument("SYMFUNC: zero coefficient stored");
    // Strictly increasing canonical order also rules out repeated keys.
    if (has_previous && !canonical_less(previous, key)) {
      throw std::invalid_argument("SYMFUNC: keys out of canonical order");
    }
    max_degree = std::max(max_degree, key.degree());
    f.add_term(key, coeff);
    previous = std::move(key);
    has_previous = true;
  }
  if (!text.empty()) throw std::invalid_argument("SYMFUNC: trailing garbage");
  if (max_degree != degree && !(f.term_count() == 0 && degree == 0)) {
    throw std::invalid_argument("SYMFUNC: header degree disagrees with terms");
  }
  return f;
}

}  // namespace sphom
