#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "adelic/adele.hpp"

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

// The representation invariants every public constructor and operation must
// maintain: finite places only, components keyed at their own place, tail
// integral off the exceptional set, no redundant exact tail restatements.
void check_invariants(const FiniteAdele& x) {
  for (const auto& [v, c] : x.exceptional()) {
    REQUIRE(v.is_finite());
    REQUIRE(v == c.place());
    bool redundant = c.is_exact() && c.value() == x.tail() &&
                     valuation(v, x.tail()) >= Val::of(0);
    REQUIRE(!redundant);
  }
  if (!x.tail().is_zero())
    for (const auto& [v, e] : finite_support(x.tail()))
      if (e < 0) REQUIRE(x.exceptional().count(v) == 1);
}

}  // namespace

TEST_CASE("diagonal image marks exactly the denominator places") {
  auto q = FieldSpec::rationals();
  FiniteAdele a = FiniteAdele::inj(frac(q, 5, 6));
  CHECK(a.exceptional().size() == 2);
  CHECK(a.exceptional().count(Place::rational_prime(q, 2)) == 1);
  CHECK(a.exceptional().count(Place::rational_prime(q, 3)) == 1);
  for (const auto& [v, c] : a.exceptional()) {
    CHECK(c.is_exact());
    CHECK(c.value() == a.tail());
  }
  // Off the marked set the component is the tail image.
  LocalElement at7 = a.component(Place::rational_prime(q, 7));
  CHECK(at7.is_exact());
  CHECK(at7.value() == frac(q, 5, 6));

  CHECK(FiniteAdele::inj(FieldElem::one(q)).exceptional().empty());
  CHECK(FiniteAdele::zero(q).exceptional().empty());
  check_invariants(a);
}

TEST_CASE("diagonal image in Q(sqrt -5): (1 + omega)/2 is non-integral only at the ramified place") {
  auto k = FieldSpec::quadratic(-5);
  FieldElem x = FieldElem::quad(k, 1, 1, 2);
  FiniteAdele a = FiniteAdele::inj(x);
  // v(1 + omega) = 1 at the place over 2 but v(2) = 2 there, and the places
  // over 3 only see the numerator.
  Place p2 = primes_above(k, 2).at(0);
  CHECK(a.exceptional().size() == 1);
  CHECK(a.exceptional().count(p2) == 1);
  CHECK(valuation(p2, x) == Val::of(-1));
  check_invariants(a);
}

TEST_CASE("construction canonicalizes and validates") {
  auto q = FieldSpec::rationals();
  Place p2 = Place::rational_prime(q, 2);
  Place p3 = Place::rational_prime(q, 3);
  FieldElem seven = FieldElem::from_int(q, 7);

  std::map<Place, LocalElement> comps;
  comps.emplace(p2, LocalElement::from_global(p2, seven));
  comps.emplace(p3, LocalElement::coset(p3, seven, 2));
  FiniteAdele a = FiniteAdele::make(comps, seven);
  // The exact restatement at 2 is pruned; the finite-precision entry at 3
  // genuinely constrains the element and stays.
  CHECK(a.exceptional().size() == 1);
  CHECK(a.exceptional().count(p3) == 1);
  check_invariants(a);

  // A missing denominator place is materialized.
  FiniteAdele b = FiniteAdele::make({}, frac(q, 1, 2));
  CHECK(b.exceptional().count(p2) == 1);
  check_invariants(b);

  std::map<Place, LocalElement> wrong;
  wrong.emplace(p2, LocalElement::from_global(p3, seven));
  CHECK(fails_with(errc::place_mismatch, [&] { FiniteAdele::make(wrong, seven); }));

  std::map<Place, LocalElement> arch;
  arch.emplace(Place::arch_real(q, 0), LocalElement::from_global(p2, seven));
  CHECK(fails_with(errc::archimedean_place, [&] { FiniteAdele::make(arch, seven); }));
}

TEST_CASE("ring operations agree with the diagonal") {
  auto q = FieldSpec::rationals();
  CHECK(adele_eq(adele_add(FiniteAdele::inj(FieldElem::from_int(q, 2)),
                           FiniteAdele::inj(FieldElem::from_int(q, 3))),
                 FiniteAdele::inj(FieldElem::from_int(q, 5))));
  CHECK(adele_eq(adele_mul(FiniteAdele::inj(frac(q, 2, 3)), FiniteAdele::inj(FieldElem::from_int(q, 3))),
                 FiniteAdele::inj(FieldElem::from_int(q, 2))));
}

TEST_CASE("product merges disjoint exceptional sets") {
  auto q = FieldSpec::rationals();
  Place p2 = Place::rational_prime(q, 2);
  Place p3 = Place::rational_prime(q, 3);
  FiniteAdele x = FiniteAdele::inj(frac(q, 1, 2));
  FiniteAdele y = FiniteAdele::inj(frac(q, 1, 3));
  FiniteAdele xy = adele_mul(x, y);
  CHECK(xy.tail() == frac(q, 1, 6));
  CHECK(xy.exceptional().size() == 2);
  CHECK(xy.component(p2).value() == frac(q, 1, 6));
  CHECK(xy.component(p3).value() == frac(q, 1, 6));
  CHECK(adele_eq(xy, FiniteAdele::inj(frac(q, 1, 6))));
  check_invariants(xy);

  // Non-diagonal components multiply componentwise against the other tail.
  std::map<Place, LocalElement> cx, cy;
  cx.emplace(p2, LocalElement::from_global(p2, frac(q, 1, 2)));
  cy.emplace(p3, LocalElement::from_global(p3, frac(q, 1, 3)));
  FiniteAdele u = FiniteAdele::make(cx, FieldElem::one(q));
  FiniteAdele v = FiniteAdele::make(cy, FieldElem::one(q));
  FiniteAdele uv = adele_mul(u, v);
  CHECK(uv.tail() == FieldElem::one(q));
  CHECK(uv.component(p2).value() == frac(q, 1, 2));
  CHECK(uv.component(p3).value() == frac(q, 1, 3));
  CHECK(uv.component(Place::rational_prime(q, 5)).value() == FieldElem::one(q));
  check_invariants(uv);
}

TEST_CASE("additive inverse cancels componentwise") {
  auto q = FieldSpec::rationals();
  Place p2 = Place::rational_prime(q, 2);
  std::map<Place, LocalElement> comps;
  comps.emplace(p2, LocalElement::coset(p2, FieldElem::one(q), 3));
  FiniteAdele x = FiniteAdele::make(comps, frac(q, 3, 5));
  FiniteAdele z = adele_add(x, adele_neg(x));
  CHECK(z.tail().is_zero());
  // The mod-8 coset of 0 survives as a component, and the sum still equals
  // the zero adele at the joint precision.
  CHECK(z.component(p2).prec() == 3);
  CHECK(z.component(p2).value().is_zero());
  CHECK(adele_eq(z, FiniteAdele::zero(q)));
  check_invariants(z);
}

TEST_CASE("mixed-precision sums truncate to the joint precision") {
  auto q = FieldSpec::rationals();
  Place p3 = Place::rational_prime(q, 3);
  std::map<Place, LocalElement> comps;
  comps.emplace(p3, LocalElement::coset(p3, FieldElem::from_int(q, 7), 2));
  FiniteAdele x = FiniteAdele::make(comps, FieldElem::zero(q));
  FiniteAdele s = adele_add(x, FiniteAdele::inj(FieldElem::from_int(q, 2)));
  CHECK(s.tail() == FieldElem::from_int(q, 2));
  CHECK(s.component(p3).prec() == 2);
  CHECK(s.component(p3).value().is_zero());  // 7 + 2 = 0 mod 9

  CHECK(!adele_eq(s, FiniteAdele::inj(FieldElem::from_int(q, 2))));
  std::map<Place, LocalElement> comps2;
  comps2.emplace(p3, LocalElement::coset(p3, FieldElem::from_int(q, 18), 2));
  CHECK(adele_eq(s, FiniteAdele::make(comps2, FieldElem::from_int(q, 2))));
}

TEST_CASE("equality distinguishes exact components and tails") {
  auto q = FieldSpec::rationals();
  Place p2 = Place::rational_prime(q, 2);
  FieldElem half = frac(q, 1, 2);
  FieldElem shifted = half + FieldElem::from_int(q, 8);

  std::map<Place, LocalElement> comps;
  comps.emplace(p2, LocalElement::from_global(p2, shifted));
  // Exact 1/2 + 8 at the place over 2 differs from exact 1/2 even though
  // they agree to 3 dyadic digits.
  CHECK(!adele_eq(FiniteAdele::inj(half), FiniteAdele::make(comps, half)));

  std::map<Place, LocalElement> coarse;
  coarse.emplace(p2, LocalElement::coset(p2, shifted, 3));
  CHECK(adele_eq(FiniteAdele::inj(half), FiniteAdele::make(coarse, half)));

  CHECK(!adele_eq(FiniteAdele::inj(FieldElem::one(q)), FiniteAdele::inj(FieldElem::from_int(q, 2))));
}

TEST_CASE("basic open membership") {
  auto q = FieldSpec::rationals();
  Place p2 = Place::rational_prime(q, 2);
  Place p3 = Place::rational_prime(q, 3);

  BasicOpenSpec everywhere_integral;
  CHECK(is_in_basic_open(FiniteAdele::inj(FieldElem::from_int(q, 3)), everywhere_integral));
  CHECK(!is_in_basic_open(FiniteAdele::inj(frac(q, 1, 2)), everywhere_integral));

  BasicOpenSpec ball;
  ball.constraints.emplace(p3, BallConstraint{FieldElem::from_int(q, 2), 1});
  CHECK(is_in_basic_open(FiniteAdele::inj(FieldElem::from_int(q, 5)), ball));
  CHECK(!is_in_basic_open(FiniteAdele::inj(FieldElem::from_int(q, 4)), ball));

  // A coset component decides the test when its precision reaches the
  // radius and raises otherwise.
  std::map<Place, LocalElement> comps;
  comps.emplace(p3, LocalElement::coset(p3, FieldElem::from_int(q, 2), 1));
  FiniteAdele x = FiniteAdele::make(comps, FieldElem::zero(q));
  CHECK(is_in_basic_open(x, ball));
  BasicOpenSpec tight;
  tight.constraints.emplace(p3, BallConstraint{FieldElem::from_int(q, 2), 2});
  CHECK(fails_with(errc::insufficient_precision, [&] { is_in_basic_open(x, tight); }));
  // ...but a visible discrepancy below the stored precision still refutes:
  // x = 5 mod 9 has v(x - 2) = 1 exactly.
  std::map<Place, LocalElement> off;
  off.emplace(p3, LocalElement::coset(p3, FieldElem::from_int(q, 5), 2));
  CHECK(!is_in_basic_open(FiniteAdele::make(off, FieldElem::zero(q)), tight));

  // Negative radius enlarges the ball past R_v; other places stay integral.
  BasicOpenSpec wide;
  wide.constraints.emplace(p2, BallConstraint{FieldElem::zero(q), -1});
  CHECK(is_in_basic_open(FiniteAdele::inj(frac(q, 1, 2)), wide));
  CHECK(!is_in_basic_open(FiniteAdele::inj(frac(q, 1, 4)), wide));
}

TEST_CASE("localization form of the worked example") {
  auto q = FieldSpec::rationals();
  Place p2 = Place::rational_prime(q, 2);
  std::map<Place, LocalElement> comps;
  comps.emplace(p2, LocalElement::from_global(p2, frac(q, 1, 2)));
  FiniteAdele x = FiniteAdele::make(comps, FieldElem::from_int(q, 3));

  LocalizationForm l = to_localization_form(x);
  CHECK(l.denominator == RingElem::from_int(q, 2));
  CHECK(l.numerator_tail == RingElem::from_int(q, 6));
  REQUIRE(l.numerator_exceptional.count(p2) == 1);
  CHECK(l.numerator_exceptional.at(p2).is_exact());
  CHECK(l.numerator_exceptional.at(p2).value() == FieldElem::one(q));

  CHECK(adele_eq(from_localization_form(l), x));

  LocalizationForm plain{{}, RingElem::from_int(q, 6), RingElem::from_int(q, 2)};
  CHECK(adele_eq(from_localization_form(plain), FiniteAdele::inj(FieldElem::from_int(q, 3))));
}

TEST_CASE("localization rejects bad presentations") {
  auto q = FieldSpec::rationals();
  Place p2 = Place::rational_prime(q, 2);
  CHECK(fails_with(errc::zero_element, [&] {
    from_localization_form({{}, RingElem::one(q), RingElem::zero(q)});
  }));
  std::map<Place, LocalElement> bad;
  bad.emplace(p2, LocalElement::from_global(p2, frac(q, 1, 2)));
  CHECK(fails_with(errc::invalid_argument, [&] {
    from_localization_form({bad, RingElem::one(q), RingElem::one(q)});
  }));
}

TEST_CASE("localization round trips preserve precision") {
  auto q = FieldSpec::rationals();
  Place p2 = Place::rational_prime(q, 2);
  Place p5 = Place::rational_prime(q, 5);
  std::map<Place, LocalElement> comps;
  comps.emplace(p2, LocalElement::coset(p2, FieldElem::from_int(q, 3), 4));
  comps.emplace(p5, LocalElement::from_global(p5, frac(q, 7, 5)));
  FiniteAdele x = FiniteAdele::make(comps, frac(q, 1, 3));

  LocalizationForm l = to_localization_form(x);
  // s is the product of all representative denominators: 3 from the tail,
  // another 3 from its materialized component at 3, and 5.
  CHECK(l.denominator == RingElem::from_int(q, 45));
  for (const auto& [v, c] : l.numerator_exceptional) CHECK(is_integer(c));
  FiniteAdele back = from_localization_form(l);
  CHECK(adele_eq(back, x));
  CHECK(back.component(p2).prec() == 4);
  check_invariants(back);
}

TEST_CASE("localization conversions are ring homomorphisms") {
  auto q = FieldSpec::rationals();
  auto k = FieldSpec::quadratic(-5);
  Place p2q = Place::rational_prime(q, 2);
  Place p2k = primes_above(k, 2).at(0);

  std::map<Place, LocalElement> cx;
  cx.emplace(p2q, LocalElement::coset(p2q, frac(q, 1, 2), 3));
  FiniteAdele x = FiniteAdele::make(cx, frac(q, 2, 3));
  FiniteAdele y = FiniteAdele::inj(frac(q, 5, 4));

  CHECK(adele_eq(from_localization_form(lf_add(to_localization_form(x), to_localization_form(y))),
                 adele_add(x, y)));
  CHECK(adele_eq(from_localization_form(lf_mul(to_localization_form(x), to_localization_form(y))),
                 adele_mul(x, y)));

  // omega is a unit at the place over 2, so omega/2 has valuation -2 there
  // and the product against a precision-3 coset still keeps one digit.
  std::map<Place, LocalElement> cu;
  cu.emplace(p2k, LocalElement::coset(p2k, FieldElem::quad(k, 1, 1, 1), 3));
  FiniteAdele u = FiniteAdele::make(cu, FieldElem::quad(k, 1, 0, 3));
  FiniteAdele w = FiniteAdele::inj(FieldElem::quad(k, 0, 1, 2));
  CHECK(adele_eq(from_localization_form(lf_add(to_localization_form(u), to_localization_form(w))),
                 adele_add(u, w)));
  CHECK(adele_eq(from_localization_form(lf_mul(to_localization_form(u), to_localization_form(w))),
                 adele_mul(u, w)));
}

TEST_CASE("full adeles over Q carry one real coordinate") {
  auto q = FieldSpec::rationals();
  Adele a = Adele::inj(frac(q, 5, 2));
  const auto& coords = std::get<std::vector<double>>(a.infinite());
  REQUIRE(coords.size() == 1);
  CHECK(coords[0] == doctest::Approx(2.5).epsilon(1e-12));

  CHECK(full_eq(full_add(Adele::inj(frac(q, 1, 2)), Adele::inj(frac(q, 1, 2))),
                Adele::inj(FieldElem::one(q))));
  CHECK(full_eq(full_mul(Adele::inj(frac(q, 2, 3)), Adele::inj(FieldElem::from_int(q, 3))),
                Adele::inj(FieldElem::from_int(q, 2))));
  CHECK(full_eq(full_neg(Adele::inj(FieldElem::one(q))), Adele::inj(FieldElem::from_int(q, -1))));

  CHECK(fails_with(errc::shape_mismatch, [&] {
    Adele::make(FiniteAdele::inj(FieldElem::one(q)), std::complex<double>(1.0, 0.0));
  }));
  CHECK(fails_with(errc::shape_mismatch, [&] {
    Adele::make(FiniteAdele::inj(FieldElem::one(q)), std::vector<double>{1.0, 1.0});
  }));
}

TEST_CASE("archimedean coordinates follow the embeddings") {
  auto r2 = FieldSpec::quadratic(2);
  Adele sqrt2 = Adele::inj(FieldElem::omega(r2));
  const auto& coords = std::get<std::vector<double>>(sqrt2.infinite());
  REQUIRE(coords.size() == 2);
  CHECK(coords[0] == doctest::Approx(1.4142135623730951).epsilon(1e-12));
  CHECK(coords[1] == doctest::Approx(-1.4142135623730951).epsilon(1e-12));

  auto k = FieldSpec::quadratic(-5);
  Adele w = Adele::inj(FieldElem::omega(k));
  auto z = std::get<std::complex<double>>(w.infinite());
  CHECK(z.real() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(z.imag() == doctest::Approx(2.2360679774997896).epsilon(1e-12));

  // Tolerance band of the archimedean comparison.
  Adele one = Adele::inj(FieldElem::one(r2));
  CHECK(full_eq(one, Adele::make(one.finite(), std::vector<double>{1.0 + 1e-12, 1.0})));
  CHECK(!full_eq(one, Adele::make(one.finite(), std::vector<double>{1.0 + 1e-6, 1.0})));
}

TEST_CASE("function field adeles use the 1/t coordinate") {
  auto ff = FieldSpec::function_field(3, 1);
  Adele t = Adele::inj(FieldElem::t_var(ff));
  const auto& at_inf = std::get<LocalElement>(t.infinite());
  CHECK(at_inf.is_exact());
  CHECK(local_valuation(at_inf) == Val::of(-1));

  Adele tinv = Adele::inj(FieldElem::one(ff) / FieldElem::t_var(ff));
  CHECK(full_eq(full_mul(t, tinv), Adele::inj(FieldElem::one(ff))));
  CHECK(fails_with(errc::shape_mismatch, [&] {
    Adele::make(FiniteAdele::inj(FieldElem::one(ff)), std::vector<double>{1.0});
  }));
}

namespace {

FieldElem random_elem(std::mt19937_64& rng, const SpecPtr& s) {
  auto pick = [&](long lo, long hi) {
    return static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)) + lo;
  };
  switch (s->family()) {
    case Family::Rationals:
      return frac(s, pick(-20, 20), pick(1, 12));
    case Family::Quadratic:
      return FieldElem::quad(s, pick(-9, 9), pick(-9, 9), pick(1, 10));
    case Family::FunctionField: {
      const FqField& F = s->fq();
      auto rand_poly = [&](int maxdeg, bool nonzero) {
        FqPoly f;
        do {
          f.c.clear();
          int deg = static_cast<int>(rng() % static_cast<unsigned>(maxdeg + 1));
          for (int i = 0; i <= deg; ++i) f.c.push_back(static_cast<Fq>(rng() % F.q()));
          f.trim();
        } while (nonzero && f.is_zero());
        return f;
      };
      return FieldElem::ff(s, rand_poly(2, false), rand_poly(2, true));
    }
  }
  return FieldElem::zero(s);
}

FiniteAdele random_adele(std::mt19937_64& rng, const SpecPtr& s,
                         const std::vector<Place>& pool) {
  std::map<Place, LocalElement> comps;
  std::size_t extras = rng() % 3;
  for (std::size_t i = 0; i < extras; ++i) {
    const Place& v = pool[rng() % pool.size()];
    if (comps.count(v)) continue;
    FieldElem val = random_elem(rng, s);
    if (rng() % 2 == 0)
      comps.emplace(v, LocalElement::from_global(v, val));
    else
      comps.emplace(v, LocalElement::coset(v, val, 1 + static_cast<std::int64_t>(rng() % 4)));
  }
  return FiniteAdele::make(std::move(comps), random_elem(rng, s));
}

}  // namespace

TEST_CASE("random operation chains preserve the representation invariants") {
  std::mt19937_64 rng(0xade1e1234ULL);
  std::vector<SpecPtr> specs = {FieldSpec::rationals(), FieldSpec::quadratic(-5),
                                FieldSpec::function_field(3, 1)};
  for (const SpecPtr& s : specs) {
    std::vector<Place> pool;
    if (s->is_function_field()) {
      for (const FqPoly& f : monic_irreducibles_up_to_degree(s->fq(), 2))
        pool.push_back(Place::ff_prime(s, f));
    } else {
      for (long p : {2, 3, 5, 7, 11})
        for (const Place& v : primes_above(s, p)) pool.push_back(v);
    }
    for (int iter = 0; iter < 120; ++iter) {
      FiniteAdele x = random_adele(rng, s, pool);
      FiniteAdele y = random_adele(rng, s, pool);
      check_invariants(x);
      check_invariants(y);
      FiniteAdele sum = adele_add(x, y);
      FiniteAdele neg = adele_neg(x);
      check_invariants(sum);
      check_invariants(neg);
      // Multiplying an exact value of negative valuation into a coarse coset
      // can exhaust the precision; that is a documented refusal, not a bug.
      try {
        check_invariants(adele_mul(x, y));
      } catch (const math_error& e) {
        REQUIRE(e.code() == errc::insufficient_precision);
      }
      // x + (-x) + y agrees with y wherever the cosets still see it.
      CHECK(adele_eq(adele_add(adele_add(x, neg), y), y));
      // Localization round trip.
      CHECK(adele_eq(from_localization_form(to_localization_form(x)), x));
    }
  }
}
