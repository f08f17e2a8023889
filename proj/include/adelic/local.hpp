#pragma once

#include <optional>

#include "adelic/valuation.hpp"

namespace adelic {

// One element of the completion K_v, stored as the coset
//   approx + m_v^{prec} R_v
// of a global field element (K is dense in K_v, so every element reachable
// through this API is such a coset). prec = nullopt means the element is the
// honest global value "approx" with no uncertainty.
//
// Invariants: finite prec >= 1; if valuation(v, approx) >= prec the
// representative is normalized to 0. The precision modulus is m_v^{prec} R_v
// regardless of the element's own valuation.
class LocalElement {
 public:
  // The image of a global element, exact.
  static LocalElement from_global(const Place& v, const FieldElem& x);
  // A coset with finite precision.
  static LocalElement coset(const Place& v, const FieldElem& x, std::int64_t prec);

  const Place& place() const { return place_; }
  const FieldElem& value() const { return approx_; }
  bool is_exact() const { return !prec_.has_value(); }
  std::int64_t prec() const;
  std::optional<std::int64_t> prec_opt() const { return prec_; }

  // The same element known to fewer digits; cannot increase precision.
  LocalElement truncated(std::int64_t prec) const;

 private:
  LocalElement(Place v, FieldElem x, std::optional<std::int64_t> prec);

  Place place_;
  FieldElem approx_;
  std::optional<std::int64_t> prec_;
};

LocalElement local_add(const LocalElement& x, const LocalElement& y);
LocalElement local_sub(const LocalElement& x, const LocalElement& y);
LocalElement local_mul(const LocalElement& x, const LocalElement& y);
LocalElement local_neg(const LocalElement& x);

// Inverse coset with precision px - 2 v(x); a result below precision 1 would
// be vacuous and raises InsufficientPrecision instead.
LocalElement local_inv(const LocalElement& x);

// Valuation when decidable: the representative's valuation if below prec (or
// the element is exact); a zero representative at finite precision only
// bounds the valuation below and raises InsufficientPrecision.
Val local_valuation(const LocalElement& x);

// Membership in R_v. Decidable for every canonical element: a zero
// representative at finite precision has valuation >= prec >= 1.
bool is_integer(const LocalElement& x);

// Equality of cosets at the joint precision: v(x - y) >= min prec. Two exact
// elements compare by field equality.
bool coset_eq(const LocalElement& x, const LocalElement& y);

// An element of R_v together with the valuation bound that proves it.
struct LocalIntegerWitness {
  LocalElement element;
  Val lower_bound;
};
LocalIntegerWitness integer_witness(const LocalElement& x);

// Digit expansion sum a_i pi^i for i from v(x) up to prec - 1, digits drawn
// from the fixed residue-system lift (integers 0..p-1 at degree-one places,
// a + b omega at inert places, low-degree polynomials at F_q[t] places).
// Exact non-terminating expansions are cut off after max_digits terms.
std::string render_padic(const LocalElement& x, int max_digits = 8);
// The same expansion at the 1/t place, printed in powers of t.
std::string render_laurent(const LocalElement& x, int max_digits = 8);

}  // namespace adelic
