#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adelic/idele.hpp"

using namespace adelic;

namespace {

bool fails_with(errc code, const std::function<void()>& f) {
  try {
    f();
  } catch (const math_error& e) {
    return e.code() == code;
  }
  return false;
}

FieldElem frac(const SpecPtr& s, long num, long den) {
  return FieldElem::rational(s, mpq_class(num, den));
}

std::int64_t exp_at(const ValuationVector& vv, const Place& v) {
  auto it = vv.exponents().find(v);
  return it == vv.exponents().end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("valuation vector of a diagonal unit lists the support of the element") {
  auto q = FieldSpec::rationals();
  ValuationVector vv = to_add_valuations(FiniteIdele::inj(frac(q, 5, 6)));
  CHECK(vv.exponents().size() == 3);
  CHECK(exp_at(vv, Place::rational_prime(q, 2)) == -1);
  CHECK(exp_at(vv, Place::rational_prime(q, 3)) == -1);
  CHECK(exp_at(vv, Place::rational_prime(q, 5)) == 1);
  CHECK(!vv.is_zero());
  CHECK(to_add_valuations(FiniteIdele::one(q)).is_zero());
}

TEST_CASE("valuation vector reads exceptional components and the tail together") {
  auto q = FieldSpec::rationals();
  Place p2 = Place::rational_prime(q, 2);
  std::map<Place, LocalElement> comps;
  comps.emplace(p2, LocalElement::from_global(p2, FieldElem::from_int(q, 4)));
  FiniteIdele x = try_invert(FiniteAdele::make(comps, FieldElem::from_int(q, 3)));
  ValuationVector vv = to_add_valuations(x);
  CHECK(vv.exponents().size() == 2);
  CHECK(exp_at(vv, p2) == 2);
  CHECK(exp_at(vv, Place::rational_prime(q, 3)) == 1);
}

TEST_CASE("try_invert refuses zeroes and coarse cosets") {
  auto q = FieldSpec::rationals();
  Place p2 = Place::rational_prime(q, 2);
  CHECK(fails_with(errc::not_a_unit, [&] { try_invert(FiniteAdele::zero(q)); }));

  std::map<Place, LocalElement> zero_comp;
  zero_comp.emplace(p2, LocalElement::from_global(p2, FieldElem::zero(q)));
  CHECK(fails_with(errc::not_a_unit, [&] {
    try_invert(FiniteAdele::make(zero_comp, FieldElem::one(q)));
  }));

  // 4 mod 4 is the coset of 0: nothing certifies invertibility.
  std::map<Place, LocalElement> coarse;
  coarse.emplace(p2, LocalElement::coset(p2, FieldElem::from_int(q, 4), 2));
  CHECK(fails_with(errc::insufficient_precision, [&] {
    try_invert(FiniteAdele::make(coarse, FieldElem::one(q)));
  }));
}

TEST_CASE("constructor validates the stored inverse") {
  auto q = FieldSpec::rationals();
  CHECK(fails_with(errc::invalid_argument, [&] {
    FiniteIdele::make(FiniteAdele::inj(FieldElem::from_int(q, 2)), FiniteAdele::inj(frac(q, 1, 3)));
  }));
  CHECK(fails_with(errc::not_a_unit, [&] {
    FiniteIdele::make(FiniteAdele::zero(q), FiniteAdele::zero(q));
  }));
  CHECK(fails_with(errc::not_a_unit, [&] { FiniteIdele::inj(FieldElem::zero(q)); }));
}

TEST_CASE("group structure: products, inverses, and the homomorphism property") {
  auto q = FieldSpec::rationals();
  FiniteIdele x = FiniteIdele::inj(frac(q, 5, 6));
  FiniteIdele y = FiniteIdele::inj(frac(q, 9, 10));

  CHECK(idele_eq(idele_mul(x, idele_inv(x)), FiniteIdele::one(q)));
  CHECK(to_add_valuations(idele_mul(x, y)) ==
        vv_add(to_add_valuations(x), to_add_valuations(y)));
  CHECK(to_add_valuations(idele_inv(x)) == vv_neg(to_add_valuations(x)));

  // 5/6 * 9/10 = 3/4: the support collapses accordingly.
  ValuationVector vv = to_add_valuations(idele_mul(x, y));
  CHECK(exp_at(vv, Place::rational_prime(q, 2)) == -2);
  CHECK(exp_at(vv, Place::rational_prime(q, 3)) == 1);
  CHECK(exp_at(vv, Place::rational_prime(q, 5)) == 0);
}

TEST_CASE("preimage of an exponent vector maps back to it") {
  auto q = FieldSpec::rationals();
  std::map<Place, std::int64_t> exps;
  exps.emplace(Place::rational_prime(q, 2), -1);
  exps.emplace(Place::rational_prime(q, 5), 2);
  ValuationVector vv = ValuationVector::make(q, exps);
  FiniteIdele pre = preimage_idele(vv);
  CHECK(pre.value().tail() == FieldElem::one(q));
  CHECK(to_add_valuations(pre) == vv);
  CHECK(!is_in_kernel(pre));

  // Uniformizers at different places of Q(sqrt -5) can share support (omega
  // - 1 cuts out both a place over 2 and one over 3); the componentwise
  // reading is unaffected.
  auto k = FieldSpec::quadratic(-5);
  Place p2 = primes_above(k, 2).at(0);
  Place p3a = primes_above(k, 3).at(0);
  std::map<Place, std::int64_t> qexps;
  qexps.emplace(p2, 1);
  qexps.emplace(p3a, -2);
  ValuationVector qvv = ValuationVector::make(k, qexps);
  CHECK(to_add_valuations(preimage_idele(qvv)) == qvv);

  CHECK(is_in_kernel(preimage_idele(ValuationVector::make(q, {}))));
}

TEST_CASE("kernel membership sees only valuations, not values") {
  auto q = FieldSpec::rationals();
  Place p2 = Place::rational_prime(q, 2);
  CHECK(is_in_kernel(FiniteIdele::inj(frac(q, -3, 7))) == false);  // support {3, 7}
  CHECK(is_in_kernel(FiniteIdele::inj(FieldElem::from_int(q, -1))));

  // A non-diagonal idele with unit components everywhere is in the kernel.
  std::map<Place, LocalElement> comps;
  comps.emplace(p2, LocalElement::coset(p2, FieldElem::from_int(q, 3), 2));
  FiniteIdele u = try_invert(FiniteAdele::make(comps, FieldElem::one(q)));
  CHECK(is_in_kernel(u));
  CHECK(!idele_eq(u, FiniteIdele::one(q)));
}

TEST_CASE("valuation vectors prune zeroes and reject infinite places") {
  auto q = FieldSpec::rationals();
  std::map<Place, std::int64_t> exps;
  exps.emplace(Place::rational_prime(q, 2), 0);
  CHECK(ValuationVector::make(q, exps).is_zero());
  std::map<Place, std::int64_t> arch;
  arch.emplace(Place::arch_real(q, 0), 1);
  CHECK(fails_with(errc::archimedean_place, [&] { ValuationVector::make(q, arch); }));
}

TEST_CASE("full ideles carry invertible archimedean coordinates") {
  auto q = FieldSpec::rationals();
  Idele x = Idele::inj(FieldElem::from_int(q, -2));
  CHECK(std::get<std::vector<double>>(x.infinite()).at(0) == doctest::Approx(-2.0));

  Idele xi = full_idele_inv(x);
  CHECK(std::get<std::vector<double>>(xi.infinite()).at(0) == doctest::Approx(-0.5));
  CHECK(full_idele_eq(full_idele_mul(x, xi), Idele::inj(FieldElem::one(q))));
  CHECK(to_add_valuations(project_to_finite(xi)) ==
        vv_neg(to_add_valuations(project_to_finite(x))));

  CHECK(fails_with(errc::not_a_unit, [&] {
    Idele::make(FiniteIdele::one(q), std::vector<double>{0.0});
  }));

  auto ff = FieldSpec::function_field(3, 1);
  Idele t = Idele::inj(FieldElem::t_var(ff));
  CHECK(local_valuation(std::get<LocalElement>(t.infinite())) == Val::of(-1));
  CHECK(local_valuation(std::get<LocalElement>(full_idele_inv(t).infinite())) == Val::of(1));
  CHECK(fails_with(errc::not_a_unit, [&] { Idele::inj(FieldElem::zero(ff)); }));
}
