#pragma once

#include "adelic/adele.hpp"

namespace adelic {

// Sparse exponent vector over the finite places: the image of an idele in
// the group of fractional ideals, written additively. Zero entries are
// pruned, so the identity is the empty map.
class ValuationVector {
 public:
  static ValuationVector make(SpecPtr s, std::map<Place, std::int64_t> exps);

  const SpecPtr& spec() const { return spec_; }
  const std::map<Place, std::int64_t>& exponents() const { return exps_; }
  bool is_zero() const { return exps_.empty(); }

  bool operator==(const ValuationVector& o) const;
  bool operator!=(const ValuationVector& o) const { return !(*this == o); }

 private:
  ValuationVector(SpecPtr s, std::map<Place, std::int64_t> e)
      : spec_(std::move(s)), exps_(std::move(e)) {}

  SpecPtr spec_;
  std::map<Place, std::int64_t> exps_;
};

ValuationVector vv_add(const ValuationVector& a, const ValuationVector& b);
ValuationVector vv_neg(const ValuationVector& a);

// Unit of the finite adele ring, stored together with its inverse so that
// membership in the unit group stays witnessed. Invariants: both tails are
// nonzero, the componentwise product is the diagonal image of 1, and every
// exceptional component has determinable valuation.
class FiniteIdele {
 public:
  static FiniteIdele make(FiniteAdele value, FiniteAdele inverse);
  // The diagonal image of a nonzero k.
  static FiniteIdele inj(const FieldElem& k);
  static FiniteIdele one(const SpecPtr& s) { return inj(FieldElem::one(s)); }

  const SpecPtr& spec() const { return value_.spec(); }
  const FiniteAdele& value() const { return value_; }
  const FiniteAdele& inverse() const { return inverse_; }

 private:
  FiniteIdele(FiniteAdele v, FiniteAdele i) : value_(std::move(v)), inverse_(std::move(i)) {}

  FiniteAdele value_;
  FiniteAdele inverse_;
};

// Inverts a finite adele componentwise. NotAUnit when some component is
// exactly zero (or the tail is); InsufficientPrecision when a coset is too
// coarse to witness invertibility.
FiniteIdele try_invert(const FiniteAdele& x);

FiniteIdele idele_mul(const FiniteIdele& x, const FiniteIdele& y);
FiniteIdele idele_inv(const FiniteIdele& x);
// Equality of the underlying adeles (the stored inverses follow suit).
bool idele_eq(const FiniteIdele& x, const FiniteIdele& y);

// The group homomorphism onto fractional ideals in additive form: place v
// maps to the valuation of the component at v. Almost all entries vanish
// because almost all components are the unit tail.
ValuationVector to_add_valuations(const FiniteIdele& x);

// Kernel of that homomorphism: the ideles with unit components everywhere.
bool is_in_kernel(const FiniteIdele& x);

// The canonical section: exact uniformizer powers pi_v^{e_v} over tail 1.
FiniteIdele preimage_idele(const ValuationVector& vv);

// Idele of the full adele ring: a finite idele plus nonzero archimedean
// coordinates (resp. an invertible 1/t-adic component).
class Idele {
 public:
  static Idele make(FiniteIdele finite, InfinitePart infinite);
  static Idele inj(const FieldElem& k);

  const SpecPtr& spec() const { return finite_.spec(); }
  const FiniteIdele& finite() const { return finite_; }
  const InfinitePart& infinite() const { return infinite_; }

 private:
  Idele(FiniteIdele f, InfinitePart i) : finite_(std::move(f)), infinite_(std::move(i)) {}

  FiniteIdele finite_;
  InfinitePart infinite_;
};

Idele full_idele_mul(const Idele& x, const Idele& y);
Idele full_idele_inv(const Idele& x);
bool full_idele_eq(const Idele& x, const Idele& y);

FiniteIdele project_to_finite(const Idele& x);

// Kernel membership ignores the infinite coordinates.
bool is_in_kernel(const Idele& x);

}  // namespace adelic
