#pragma once

#include <optional>
#include <string>

#include "assocform/form.hpp"

namespace assocform {

// Grammar: terms joined by '+'/'-'; a term is [coeff][*]var^exp[*var^exp...];
// coeff is an integer or p/q rational; variables are x1..xn in S and z1..zn
// in D; whitespace is ignored. All terms must share one total degree.
//
// The ring is inferred from the variable letter. Pure-constant input (or "0")
// has no letter and defaults to S unless `expected` says otherwise; when
// `expected` is set, a conflicting letter is a parse error.
HomogeneousForm parse_form(const std::string& text, int n,
                           std::optional<Ring> expected = std::nullopt);

// Canonical output: grevlex term order, no leading '+', '*' between factors,
// coefficient 1 elided except on constant terms, exponent 1 elided. The zero
// form prints as "0".
std::string format_form(const HomogeneousForm& f);

}  // namespace assocform
