#include "adelic/ideal.hpp"

#include <tuple>

#include "adelic/intfactor.hpp"

namespace adelic {

namespace {

// HNF of the Z-lattice spanned by the given elements of Z[omega]; the span
// must already be an ideal (closed under multiplication by omega), which
// callers guarantee by including omega * g for every generator g.
IntegralIdeal hnf_from_lattice(const SpecPtr& s, const std::vector<QuadInt>& gens) {
  // Column reduction: first produce a vector (bu, c) with c = gcd of all
  // omega-parts, then eliminate the omega-part of everything else.
  mpz_class bu = 0, c = 0;
  for (const QuadInt& g : gens) {
    if (g.b == 0) continue;
    mpz_class gg, x, y;
    mpz_gcdext(gg.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), c.get_mpz_t(), g.b.get_mpz_t());
    bu = x * bu + y * g.a;
    c = gg;
  }
  mpz_class a = 0;
  for (const QuadInt& g : gens) {
    mpz_class residue = g.a;
    if (g.b != 0) residue -= (g.b / c) * bu;
    a = gcd(a, residue);
  }
  if (a == 0 || c == 0) fail(errc::zero_ideal, "the zero module is not an ideal");
  if (c < 0) c = -c;
  mpz_class b = ((bu % a) + a) % a;
  return IntegralIdeal::from_hnf(s, a, b, c);
}

IntegralIdeal hnf_from_quad_gens(const SpecPtr& s, const std::vector<QuadInt>& gens) {
  std::vector<QuadInt> lattice;
  lattice.reserve(2 * gens.size());
  for (const QuadInt& g : gens) {
    lattice.push_back(g);
    // omega * (u + v omega) = -v N(omega) + (u + v Tr(omega)) omega.
    lattice.push_back(QuadInt{-g.b * s->omega_norm(), g.a + g.b * s->omega_trace()});
  }
  return hnf_from_lattice(s, lattice);
}

}  // namespace

IntegralIdeal IntegralIdeal::unit_ideal(const SpecPtr& s) {
  return principal(RingElem::one(s));
}

IntegralIdeal IntegralIdeal::principal(const RingElem& g) {
  return from_generators({g});
}

IntegralIdeal IntegralIdeal::from_generators(const std::vector<RingElem>& gens) {
  if (gens.empty()) fail(errc::zero_ideal, "no generators");
  const SpecPtr& s = gens.front().spec();
  switch (s->family()) {
    case Family::Rationals: {
      mpz_class g = 0;
      for (const RingElem& x : gens) g = gcd(g, x.z());
      if (g == 0) fail(errc::zero_ideal, "the zero ideal is excluded");
      IntegralIdeal I(s);
      I.gen_z_ = abs(g);
      return I;
    }
    case Family::FunctionField: {
      FqPoly g = poly_zero();
      for (const RingElem& x : gens) g = poly_gcd(s->fq(), g, x.poly());
      if (g.is_zero()) fail(errc::zero_ideal, "the zero ideal is excluded");
      IntegralIdeal I(s);
      I.gen_poly_ = std::move(g);
      return I;
    }
    case Family::Quadratic: {
      std::vector<QuadInt> qs;
      for (const RingElem& x : gens)
        if (!x.is_zero()) qs.push_back(x.quad());
      if (qs.empty()) fail(errc::zero_ideal, "the zero ideal is excluded");
      return hnf_from_quad_gens(s, qs);
    }
  }
  fail(errc::wrong_family, "bad family");
}

IntegralIdeal IntegralIdeal::from_hnf(const SpecPtr& s, const mpz_class& a, const mpz_class& b,
                                      const mpz_class& c) {
  if (!s->is_quadratic()) fail(errc::wrong_family, "HNF ideals are quadratic-only");
  if (a <= 0 || c <= 0 || b < 0 || b >= a || a % c != 0 || b % c != 0)
    fail(errc::invalid_argument, "not a normalized ideal triple");
  // Closure under omega: omega (b + c omega) must lie in the lattice.
  mpz_class bc = b / c;
  mpz_class closure = bc * bc + s->omega_trace() * bc + s->omega_norm();
  if ((c * closure) % a != 0)
    fail(errc::invalid_argument, "lattice is not an ideal of Z[omega]");
  IntegralIdeal I(s);
  I.a_ = a;
  I.b_ = b;
  I.c_ = c;
  return I;
}

const mpz_class& IntegralIdeal::gen_z() const {
  if (!spec_->is_rationals()) fail(errc::wrong_family, "gen_z is for spec Q");
  return gen_z_;
}

const FqPoly& IntegralIdeal::gen_poly() const {
  if (!spec_->is_function_field()) fail(errc::wrong_family, "gen_poly is for spec F_q(t)");
  return gen_poly_;
}

const mpz_class& IntegralIdeal::hnf_a() const { return a_; }
const mpz_class& IntegralIdeal::hnf_b() const { return b_; }
const mpz_class& IntegralIdeal::hnf_c() const { return c_; }

bool IntegralIdeal::is_unit_ideal() const {
  switch (spec_->family()) {
    case Family::Rationals:
      return gen_z_ == 1;
    case Family::FunctionField:
      return gen_poly_.degree() == 0;
    case Family::Quadratic:
      return a_ == 1 && c_ == 1;
  }
  return false;
}

mpz_class IntegralIdeal::norm() const {
  switch (spec_->family()) {
    case Family::Rationals:
      return gen_z_;
    case Family::Quadratic:
      return a_ * c_;
    case Family::FunctionField:
      fail(errc::wrong_family, "no integer norm over F_q[t]");
  }
  fail(errc::wrong_family, "bad family");
}

bool IntegralIdeal::contains(const RingElem& x) const {
  require_same_spec(*spec_, *x.spec());
  switch (spec_->family()) {
    case Family::Rationals:
      return x.z() % gen_z_ == 0;
    case Family::FunctionField:
      return poly_mod(spec_->fq(), x.poly(), gen_poly_).is_zero();
    case Family::Quadratic: {
      // u + v omega lies in the lattice iff c | v and a | u - (v/c) b.
      const QuadInt& q = x.quad();
      if (q.b % c_ != 0) return false;
      return (q.a - (q.b / c_) * b_) % a_ == 0;
    }
  }
  return false;
}

bool IntegralIdeal::contains_ideal(const IntegralIdeal& J) const {
  require_same_spec(*spec_, *J.spec_);
  for (const RingElem& g : J.basis_elems())
    if (!contains(g)) return false;
  return true;
}

std::vector<RingElem> IntegralIdeal::basis_elems() const {
  switch (spec_->family()) {
    case Family::Rationals:
      return {RingElem::from_int(spec_, gen_z_)};
    case Family::FunctionField:
      return {RingElem::poly(spec_, gen_poly_)};
    case Family::Quadratic:
      return {RingElem::quad(spec_, a_, 0), RingElem::quad(spec_, b_, c_)};
  }
  fail(errc::wrong_family, "bad family");
}

bool IntegralIdeal::operator==(const IntegralIdeal& o) const {
  require_same_spec(*spec_, *o.spec_);
  return gen_z_ == o.gen_z_ && gen_poly_ == o.gen_poly_ && a_ == o.a_ && b_ == o.b_ &&
         c_ == o.c_;
}

bool IntegralIdeal::operator<(const IntegralIdeal& o) const {
  require_same_spec(*spec_, *o.spec_);
  switch (spec_->family()) {
    case Family::Rationals:
      return gen_z_ < o.gen_z_;
    case Family::FunctionField:
      return gen_poly_ < o.gen_poly_;
    case Family::Quadratic:
      return std::tie(a_, b_, c_) < std::tie(o.a_, o.b_, o.c_);
  }
  return false;
}

IntegralIdeal ideal_mul(const IntegralIdeal& x, const IntegralIdeal& y) {
  const SpecPtr& s = x.spec();
  require_same_spec(*s, *y.spec());
  switch (s->family()) {
    case Family::Rationals:
      return IntegralIdeal::principal(RingElem::from_int(s, x.gen_z() * y.gen_z()));
    case Family::FunctionField:
      return IntegralIdeal::principal(
          RingElem::poly(s, poly_mul(s->fq(), x.gen_poly(), y.gen_poly())));
    case Family::Quadratic: {
      std::vector<RingElem> gens;
      for (const RingElem& gx : x.basis_elems())
        for (const RingElem& gy : y.basis_elems()) gens.push_back(gx * gy);
      return IntegralIdeal::from_generators(gens);
    }
  }
  fail(errc::wrong_family, "bad family");
}

IntegralIdeal ideal_pow(const IntegralIdeal& x, int k) {
  if (k < 0) fail(errc::invalid_argument, "negative ideal power");
  IntegralIdeal acc = IntegralIdeal::unit_ideal(x.spec());
  for (int i = 0; i < k; ++i) acc = ideal_mul(acc, x);
  return acc;
}

IntegralIdeal place_ideal(const Place& v) {
  const SpecPtr& s = v.spec();
  if (!v.is_finite()) fail(errc::archimedean_place, "only finite places carry ideals");
  switch (s->family()) {
    case Family::Rationals:
      return IntegralIdeal::principal(RingElem::from_int(s, v.p()));
    case Family::FunctionField:
      return IntegralIdeal::principal(RingElem::poly(s, v.poly()));
    case Family::Quadratic: {
      if (v.split() == QuadSplit::Inert)
        return IntegralIdeal::from_hnf(s, v.p(), 0, v.p());
      // (p, omega - r) as a lattice: Z p + Z (-r + omega).
      mpz_class b = ((-v.root()) % v.p() + v.p()) % v.p();
      return IntegralIdeal::from_hnf(s, v.p(), b, 1);
    }
  }
  fail(errc::wrong_family, "bad family");
}

int ideal_valuation(const Place& v, const IntegralIdeal& I) {
  require_same_spec(*v.spec(), *I.spec());
  const SpecPtr& s = I.spec();
  switch (s->family()) {
    case Family::Rationals: {
      mpz_class g = I.gen_z();
      return remove_factor(g, v.p());
    }
    case Family::FunctionField: {
      const FqField& F = s->fq();
      FqPoly g = I.gen_poly();
      int k = 0;
      for (;;) {
        auto [q, r] = poly_divmod(F, g, v.poly());
        if (!r.is_zero()) return k;
        ++k;
        g = q;
      }
    }
    case Family::Quadratic: {
      IntegralIdeal P = place_ideal(v);
      IntegralIdeal Pk = P;
      int k = 0;
      while (Pk.contains_ideal(I)) {
        ++k;
        Pk = ideal_mul(Pk, P);
      }
      return k;
    }
  }
  fail(errc::wrong_family, "bad family");
}

std::map<Place, int> factor_ideal(const IntegralIdeal& I) {
  const SpecPtr& s = I.spec();
  std::map<Place, int> out;
  switch (s->family()) {
    case Family::Rationals: {
      for (const auto& [p, e] : factor_integer(I.gen_z()))
        out.emplace(Place::rational_prime(s, p), e);
      return out;
    }
    case Family::FunctionField: {
      for (const auto& [q, e] : poly_factor(s->fq(), I.gen_poly()))
        if (q.degree() >= 1) out.emplace(Place::ff_prime(s, q), e);
      return out;
    }
    case Family::Quadratic: {
      for (const auto& [p, e] : factor_integer(I.norm())) {
        (void)e;
        for (const Place& v : primes_above(s, p)) {
          int k = ideal_valuation(v, I);
          if (k > 0) out.emplace(v, k);
        }
      }
      return out;
    }
  }
  fail(errc::wrong_family, "bad family");
}

}  // namespace adelic
