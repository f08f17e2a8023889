#pragma once

#include <optional>
#include <string>

#include "adelic/adele.hpp"
#include "adelic/classgroup.hpp"

namespace adelic {

// Field names: `Q`, `Q(sqrt d)` with d a squarefree integer, `Fq(t;q=N)`
// with N a prime power. Matches FieldSpec::name().
SpecPtr parse_field(const std::string& text);

// Expression grammar over the field: integer literals, the symbols w / t / u,
// binary + - * / and integer powers ^, parentheses, and juxtaposition as in
// `2w`, `3t^2`, `(1+u)t`. Throws parse_error on bad syntax; arithmetic
// failures (division by zero, w outside a quadratic field) surface as
// math_error.
FieldElem parse_element(const SpecPtr& s, const std::string& text);

// `7`, `[11]`, `[2, 1+w]`, `t^2+1`, `inf`, `inf_real_0/1`, `inf_complex`.
Place parse_place(const SpecPtr& s, const std::string& text);

// `{2: 1/2, 3: 7 prec 4; tail 1}` with an optional `; inf ...` clause whose
// shape follows the field: one real coordinate over Q, two over a real
// quadratic field, `a+bi` over an imaginary one, a 1/t-place component with
// optional `prec` for function fields.
struct ParsedAdele {
  FiniteAdele finite;
  std::optional<InfinitePart> infinite;
};
ParsedAdele parse_adele(const SpecPtr& s, const std::string& text);

// Products of powers of ideal atoms: `(elem)` principal, `(a, b+cw)` a
// normalized lattice over a quadratic order, bracketed or bare places, each
// with an optional integer exponent, joined by `*` or `/`.
FractionalIdeal parse_fractional_ideal(const SpecPtr& s, const std::string& text);

}  // namespace adelic
