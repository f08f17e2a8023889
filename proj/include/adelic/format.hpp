#pragma once

#include <string>

#include <json.hpp>

#include "adelic/classgroup.hpp"
#include "adelic/local.hpp"

namespace adelic {

// Canonical text forms. Everything printed here re-parses to an equal value
// through the parse module; grammar tokens: w = the quadratic generator
// omega, t = the function field variable, u = the F_q extension generator.
std::string format_fq(const FqField& F, Fq a);
std::string format_poly(const FqField& F, const FqPoly& f);
std::string format_ring_elem(const RingElem& x);
std::string format_field_elem(const FieldElem& x);
// Places: `7`, `[2, 1+w]`, `[11]` (inert), `t^2+1`, `inf`.
std::string format_place(const Place& v);
std::string format_ideal(const IntegralIdeal& I);
std::string format_val(const Val& v);

// Shortest decimal that reads back to the same double, always marked as a
// double (a bare integer gets a trailing .0).
std::string format_double(double x);

// Literal forms matching the CLI grammar: `1/2` or `7 prec 4` per component,
// `{2: 1/2, 3: 7 prec 4; tail 1}` for a finite adele, `; inf ...` appended
// for a full one. An idele prints as the literal of its value adele.
std::string format_component(const LocalElement& x);
std::string format_finite_adele(const FiniteAdele& x);
std::string format_infinite_part(const SpecPtr& s, const InfinitePart& inf);
std::string format_adele(const Adele& x);
std::string format_finite_idele(const FiniteIdele& x);
std::string format_idele(const Idele& x);

// `7^2 * 11` for factorizations; empty products print as `1`.
std::string format_valuation_vector(const ValuationVector& m);
// Principal generator form `(2/3)` over the PIDs, `(a, b+cw)/den` otherwise.
std::string format_fractional_ideal(const FractionalIdeal& I);
std::string format_quad_form(const QuadForm& f);

// JSON mirrors of the literal grammar; exact values are strings, places are
// their text form, maps become lists sorted by the canonical place order.
using json = nlohmann::ordered_json;
json json_component(const Place& v, const LocalElement& x);
json json_finite_adele(const FiniteAdele& x);
json json_adele(const Adele& x);
json json_valuation_vector(const ValuationVector& m);
json json_fractional_ideal(const FractionalIdeal& I);
json json_class_group(const ClassGroup& g);

}  // namespace adelic
