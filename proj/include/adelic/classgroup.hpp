#pragma once

#include <array>
#include <optional>

#include "adelic/idele.hpp"

namespace adelic {

// Binary quadratic form a x^2 + b xy + c y^2; used with negative
// discriminant b^2 - 4ac only.
struct QuadForm {
  mpz_class a, b, c;

  bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator!=(const QuadForm& o) const { return !(*this == o); }
};

mpz_class form_discriminant(const QuadForm& f);

// The form of the trivial ideal class: (1, 0, -D/4) or (1, 1, (1-D)/4).
QuadForm principal_form(const SpecPtr& s);

// Gauss reduction to the unique representative with |b| <= a <= c and
// b >= 0 when |b| = a or a = c.
QuadForm reduce_form(QuadForm f);

// All reduced forms of discriminant D < 0, enumerated directly from the
// reduction inequalities (so this is usable as an independent class-number
// oracle). Order: a ascending, then b descending, then c.
std::vector<QuadForm> reduced_forms(const mpz_class& D);

// Nonzero fractional ideal a^{-1} J with a in R and J integral, kept in the
// canonical presentation derived from its place-exponent vector: a is the
// smallest product of rational primes (resp. polynomial, integer) clearing
// the negative exponents, which leaves a and J without common content.
class FractionalIdeal {
 public:
  static FractionalIdeal from_exponents(const SpecPtr& s, std::map<Place, std::int64_t> exps);
  static FractionalIdeal from_pair(const RingElem& a, const IntegralIdeal& J);
  static FractionalIdeal from_integral(const IntegralIdeal& J);
  static FractionalIdeal principal(const FieldElem& k);  // k nonzero
  static FractionalIdeal unit(const SpecPtr& s) { return from_exponents(s, {}); }

  const SpecPtr& spec() const { return spec_; }
  const RingElem& denom() const { return a_; }
  const IntegralIdeal& ideal_part() const { return ideal_; }
  const std::map<Place, std::int64_t>& exponents() const { return exps_; }
  bool is_unit() const { return exps_.empty(); }

 private:
  FractionalIdeal(SpecPtr s, RingElem a, IntegralIdeal J, std::map<Place, std::int64_t> e)
      : spec_(std::move(s)), a_(std::move(a)), ideal_(std::move(J)), exps_(std::move(e)) {}

  SpecPtr spec_;
  RingElem a_;
  IntegralIdeal ideal_;
  std::map<Place, std::int64_t> exps_;
};

// Abelian group laws through the exponent vectors.
FractionalIdeal frac_mul(const FractionalIdeal& x, const FractionalIdeal& y);
FractionalIdeal frac_inv(const FractionalIdeal& x);
bool frac_eq(const FractionalIdeal& x, const FractionalIdeal& y);

ValuationVector frac_factorization(const FractionalIdeal& I);

// A generator when the ideal is principal. Always produced over the
// principal ideal domains; for imaginary quadratic fields decided by form
// reduction, with the generator tracked through the reduction steps and
// verified before returning. Real quadratic fields are not supported
// (principality there needs the fundamental unit).
std::optional<FieldElem> is_principal(const FractionalIdeal& I);

// The group homomorphism from finite ideles onto fractional ideals and its
// uniformizer-power section.
FractionalIdeal map_to_fractional_ideals(const FiniteIdele& x);
FiniteIdele preimage_idele(const FractionalIdeal& I);

// Ideal class: trivial over a principal ideal domain, a reduced form over an
// imaginary quadratic field.
class IdealClass {
 public:
  static IdealClass trivial(const SpecPtr& s);
  static IdealClass of_form(const SpecPtr& s, const QuadForm& reduced);

  const SpecPtr& spec() const { return spec_; }
  // Only meaningful over imaginary quadratic fields.
  const QuadForm& form() const;
  bool is_principal_class() const;

  bool operator==(const IdealClass& o) const;
  bool operator!=(const IdealClass& o) const { return !(*this == o); }

 private:
  IdealClass(SpecPtr s, std::optional<QuadForm> f) : spec_(std::move(s)), form_(std::move(f)) {}

  SpecPtr spec_;
  std::optional<QuadForm> form_;  // empty over a PID
};

IdealClass class_of_ideal(const FractionalIdeal& I);

// The ideal class group of an imaginary quadratic field as the reduced-forms
// list with a composition table computed through ideal multiplication.
class ClassGroup {
 public:
  static ClassGroup of(const SpecPtr& s);  // quadratic, d < 0

  const SpecPtr& spec() const { return spec_; }
  const std::vector<QuadForm>& forms() const { return forms_; }
  int order() const { return static_cast<int>(forms_.size()); }
  int index_of(const IdealClass& c) const;
  int compose(int i, int j) const { return table_[i][j]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  ClassGroup(SpecPtr s, std::vector<QuadForm> f, std::vector<std::vector<int>> t)
      : spec_(std::move(s)), forms_(std::move(f)), table_(std::move(t)) {}

  SpecPtr spec_;
  std::vector<QuadForm> forms_;
  std::vector<std::vector<int>> table_;
};

// Coset of an idele modulo the diagonal K^*; operations act on stored
// representatives, equality is the decision procedure below.
class IdeleClass {
 public:
  static IdeleClass of(Idele rep) { return IdeleClass(std::move(rep)); }
  const Idele& representative() const { return rep_; }
  const SpecPtr& spec() const { return rep_.spec(); }

 private:
  explicit IdeleClass(Idele rep) : rep_(std::move(rep)) {}
  Idele rep_;
};

// The torsion units of R (all units except over real quadratic fields):
// {1,-1} over Z, the 4th resp. 6th roots of unity for d = -1, -3, the
// nonzero constants over F_q[t].
std::vector<FieldElem> ring_units(const SpecPtr& s);

// The induced map C_K -> Cl(K) and its section through uniformizer powers.
IdealClass idele_class_to_ideal_class(const IdeleClass& x);
IdeleClass ideal_class_section(const IdealClass& c);

// Witness that a class lies in I_{K,inf} K^* / K^*: a decomposition
// representative = u * inj(k) with u of everywhere-zero finite valuation.
struct KernelWitness {
  Idele u;
  FieldElem k;
};
std::optional<KernelWitness> kernel_subgroup_witness(const IdeleClass& x);
bool is_in_kernel_subgroup(const IdeleClass& x);

// Equality in the quotient: x y^{-1} must decompose as u * inj(k) with u of
// zero finite valuation everywhere and infinite coordinates matching some
// torsion unit (the generator k is only determined up to units). Archimedean
// coordinates compare within kArchTolerance.
bool idele_class_eq(const IdeleClass& x, const IdeleClass& y);

}  // namespace adelic
