#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "sphom/symfunc.hpp"

namespace sphom {

// Canonical text form of a SymmetricFunction, exact and
// locale-independent:
//
//   SYMFUNC v1 degree=<d> terms=<t>
//   <part,part,...>: <numerator>/<denominator>
//   ...
//
// d is the largest term degree (0 for the zero function), t the term
// count. Terms appear in canonical partition order; the empty
// partition renders as "-". Serialization of equal functions is
// byte-identical, which disk-cache checksums rely on.
std::string symfunc_to_text(const SymmetricFunction& f);

// Strict inverse: rejects malformed headers, out-of-order or repeated
// keys, unreduced fractions and term/degree counts that disagree with
// the body.
SymmetricFunction symfunc_from_text(std::string_view text);

}  // namespace sphom
