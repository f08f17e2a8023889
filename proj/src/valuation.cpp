#include "adelic/valuation.hpp"

#include "adelic/intfactor.hpp"

namespace adelic {

Val int_valuation(const Place& v, const RingElem& x) {
  require_same_spec(*v.spec(), *x.spec());
  if (v.is_archimedean()) fail(errc::archimedean_place, "no discrete valuation there");
  if (x.is_zero()) return Val::infinity();
  if (v.kind() == PlaceKind::FFInfinity) return Val::of(-x.poly().degree());

  const SpecPtr& s = x.spec();
  switch (s->family()) {
    case Family::Rationals: {
      mpz_class n = x.z();
      return Val::of(remove_factor(n, v.p()));
    }
    case Family::FunctionField: {
      const FqField& F = s->fq();
      FqPoly g = x.poly();
      std::int64_t k = 0;
      for (;;) {
        auto [q, r] = poly_divmod(F, g, v.poly());
        if (!r.is_zero()) return Val::of(k);
        ++k;
        g = q;
      }
    }
    case Family::Quadratic: {
      IntegralIdeal P = place_ideal(v);
      IntegralIdeal Pk = P;
      std::int64_t k = 0;
      while (Pk.contains(x)) {
        ++k;
        Pk = ideal_mul(Pk, P);
      }
      return Val::of(k);
    }
  }
  fail(errc::wrong_family, "bad family");
}

Val valuation(const Place& v, const FieldElem& x) {
  if (x.is_zero()) {
    if (v.is_archimedean()) fail(errc::archimedean_place, "no discrete valuation there");
    return Val::infinity();
  }
  return int_valuation(v, x.numerator()) - int_valuation(v, x.denominator());
}

FieldElem uniformizer(const Place& v) {
  const SpecPtr& s = v.spec();
  if (v.is_archimedean()) fail(errc::archimedean_place, "no uniformizer there");

  FieldElem pi = FieldElem::one(s);
  switch (s->family()) {
    case Family::Rationals:
      pi = FieldElem::from_int(s, v.p());
      break;
    case Family::FunctionField:
      if (v.kind() == PlaceKind::FFInfinity)
        pi = FieldElem::one(s) / FieldElem::t_var(s);
      else
        pi = FieldElem::from_ring(RingElem::poly(s, v.poly()));
      break;
    case Family::Quadratic: {
      if (v.split() == QuadSplit::Inert) {
        pi = FieldElem::from_int(s, v.p());
        break;
      }
      // omega - r cuts out this place; it can acquire valuation 2, in which
      // case shifting by p drops it back to 1 (split), or sqrt(d) = 2 omega -
      // Tr(omega) serves (ramified, odd p; at p = 2 the first candidate
      // always works).
      std::vector<FieldElem> candidates;
      FieldElem w = FieldElem::omega(s);
      candidates.push_back(w - FieldElem::from_int(s, v.root()));
      candidates.push_back(w - FieldElem::from_int(s, v.root() - v.p()));
      if (v.split() == QuadSplit::Ramified)
        candidates.push_back(w + w - FieldElem::from_int(s, s->omega_trace()));
      for (const FieldElem& c : candidates)
        if (valuation(v, c) == Val::of(1)) return c;
      fail(errc::invalid_argument, "no uniformizer candidate verified");
    }
  }
  if (valuation(v, pi) != Val::of(1))
    fail(errc::invalid_argument, "uniformizer verification failed");
  return pi;
}

std::map<Place, std::int64_t> finite_support(const FieldElem& x) {
  if (x.is_zero()) fail(errc::zero_element, "support of zero is everything");
  std::map<Place, std::int64_t> out;
  // Numerator and denominator can share places (Z[omega]: the denominator is
  // a rational integer), so merge signed exponents rather than concatenating.
  for (const auto& [v, e] : factor_ideal(IntegralIdeal::principal(x.numerator()))) out[v] += e;
  for (const auto& [v, e] : factor_ideal(IntegralIdeal::principal(x.denominator()))) out[v] -= e;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace adelic
