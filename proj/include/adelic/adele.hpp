#pragma once

#include <complex>
#include <map>
#include <variant>
#include <vector>

#include "adelic/local.hpp"

namespace adelic {

// Comparison tolerance for archimedean coordinates (doubles); the finite
// part is always exact.
inline constexpr double kArchTolerance = 1e-9;

// Finitely described element of the restricted product of the K_v over the
// finite places: the component at v is exceptional[v] when present and the
// image of tail otherwise. Invariant: valuation(v, tail) >= 0 off the
// exceptional set, so the description really is a restricted-product element.
//
// Canonical form: an exceptional entry that is exact, equals the tail image,
// and sits at a place where the tail is integral carries no information and
// is pruned. Missing entries at tail denominator places are materialized on
// construction (the semantics fixes them anyway).
class FiniteAdele {
 public:
  static FiniteAdele make(std::map<Place, LocalElement> exceptional, FieldElem tail);
  // The diagonal image of k: tail k, exact components at denominator places.
  static FiniteAdele inj(const FieldElem& k);
  static FiniteAdele zero(const SpecPtr& s) { return inj(FieldElem::zero(s)); }
  static FiniteAdele one(const SpecPtr& s) { return inj(FieldElem::one(s)); }

  const SpecPtr& spec() const { return tail_.spec(); }
  const FieldElem& tail() const { return tail_; }
  const std::map<Place, LocalElement>& exceptional() const { return exceptional_; }

  // The component at an arbitrary finite place.
  LocalElement component(const Place& v) const;

 private:
  FiniteAdele(std::map<Place, LocalElement> exceptional, FieldElem tail)
      : exceptional_(std::move(exceptional)), tail_(std::move(tail)) {}

  std::map<Place, LocalElement> exceptional_;
  FieldElem tail_;
};

FiniteAdele adele_add(const FiniteAdele& x, const FiniteAdele& y);
FiniteAdele adele_mul(const FiniteAdele& x, const FiniteAdele& y);
FiniteAdele adele_neg(const FiniteAdele& x);

// Tails equal in K and components coset-equal at the joint precision over
// the union of the exceptional sets (off it both components are the equal
// tails). Decidable: distinct tails differ at infinitely many places, so
// they can never be compensated by finitely many exceptional entries.
bool adele_eq(const FiniteAdele& x, const FiniteAdele& y);

// Valuation ball v(x - center) >= radius at one place.
struct BallConstraint {
  FieldElem center;
  std::int64_t radius;
};

// A basic open of the restricted-product topology: finitely many valuation
// balls, the full R_v everywhere else.
struct BasicOpenSpec {
  std::map<Place, BallConstraint> constraints;
};

// Membership test; raises InsufficientPrecision when a ball test cannot be
// decided at the stored precision of a component.
bool is_in_basic_open(const FiniteAdele& x, const BasicOpenSpec& U);

// Presentation of a finite adele as (integral tuple) / s with s in R: the
// localization of prod_v R_v at the nonzero elements of R.
struct LocalizationForm {
  std::map<Place, LocalElement> numerator_exceptional;  // all integral
  RingElem numerator_tail;
  RingElem denominator;  // nonzero
};

LocalizationForm to_localization_form(const FiniteAdele& x);
FiniteAdele from_localization_form(const LocalizationForm& l);
// Fraction arithmetic on presentations (used to check both conversion
// directions are ring homomorphisms).
LocalizationForm lf_add(const LocalizationForm& a, const LocalizationForm& b);
LocalizationForm lf_mul(const LocalizationForm& a, const LocalizationForm& b);

// Archimedean coordinates: R^1 for Q, R^2 for real quadratic, C for
// imaginary quadratic; for F_q(t) the coordinate lives at the 1/t place.
using InfinitePart = std::variant<std::vector<double>, std::complex<double>, LocalElement>;

class Adele {
 public:
  static Adele make(FiniteAdele finite, InfinitePart infinite);
  static Adele inj(const FieldElem& k);

  const SpecPtr& spec() const { return finite_.spec(); }
  const FiniteAdele& finite() const { return finite_; }
  const InfinitePart& infinite() const { return infinite_; }

 private:
  Adele(FiniteAdele f, InfinitePart i) : finite_(std::move(f)), infinite_(std::move(i)) {}

  FiniteAdele finite_;
  InfinitePart infinite_;
};

Adele full_add(const Adele& x, const Adele& y);
Adele full_mul(const Adele& x, const Adele& y);
Adele full_neg(const Adele& x);
// Finite parts exactly equal, archimedean coordinates within kArchTolerance.
bool full_eq(const Adele& x, const Adele& y);

// The archimedean coordinate vector of a field element (or its 1/t-adic
// image for function fields).
InfinitePart infinite_image(const FieldElem& k);

}  // namespace adelic
