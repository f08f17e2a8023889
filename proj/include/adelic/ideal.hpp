#pragma once

#include <map>

#include "adelic/place.hpp"

namespace adelic {

// Nonzero integral ideal of R. For the principal ideal domains Z and F_q[t]
// this is a canonical generator (positive, resp. monic); for Z[omega] it is
// the Hermite normal form lattice
//   I = Z a + Z (b + c omega),  a, c > 0,  c | a,  c | b,  0 <= b < a,
// which determines the ideal uniquely. N(I) = a c.
class IntegralIdeal {
 public:
  static IntegralIdeal unit_ideal(const SpecPtr& s);
  static IntegralIdeal principal(const RingElem& g);
  static IntegralIdeal from_generators(const std::vector<RingElem>& gens);
  static IntegralIdeal from_hnf(const SpecPtr& s, const mpz_class& a, const mpz_class& b,
                                const mpz_class& c);

  const SpecPtr& spec() const { return spec_; }

  // Canonical generator (Z and F_q[t] only).
  const mpz_class& gen_z() const;
  const FqPoly& gen_poly() const;
  const mpz_class& hnf_a() const;
  const mpz_class& hnf_b() const;
  const mpz_class& hnf_c() const;

  bool is_unit_ideal() const;
  // Index [R : I] as an integer (Z and Z[omega] families).
  mpz_class norm() const;

  bool contains(const RingElem& x) const;
  // Whether J is a subset of this ideal.
  bool contains_ideal(const IntegralIdeal& J) const;

  // Z-module (resp. F_q[t]-module) generators: {g} or {a, b + c omega}.
  std::vector<RingElem> basis_elems() const;

  bool operator==(const IntegralIdeal& o) const;
  bool operator!=(const IntegralIdeal& o) const { return !(*this == o); }
  bool operator<(const IntegralIdeal& o) const;

 private:
  explicit IntegralIdeal(SpecPtr s) : spec_(std::move(s)) {}

  SpecPtr spec_;
  mpz_class gen_z_;
  FqPoly gen_poly_;
  mpz_class a_, b_, c_;
};

IntegralIdeal ideal_mul(const IntegralIdeal& x, const IntegralIdeal& y);
IntegralIdeal ideal_pow(const IntegralIdeal& x, int k);

// The maximal ideal attached to a finite place.
IntegralIdeal place_ideal(const Place& v);

// Exponent of m_v in the factorization of I: the largest k with I inside m_v^k.
int ideal_valuation(const Place& v, const IntegralIdeal& I);

// Factorization into maximal ideals: I = prod m_v^{e_v} with all e_v >= 1.
std::map<Place, int> factor_ideal(const IntegralIdeal& I);

}  // namespace adelic
