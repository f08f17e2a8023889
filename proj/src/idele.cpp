#include "adelic/idele.hpp"

namespace adelic {

ValuationVector ValuationVector::make(SpecPtr s, std::map<Place, std::int64_t> exps) {
  for (const auto& [v, e] : exps) {
    require_same_spec(*s, *v.spec());
    if (!v.is_finite()) fail(errc::archimedean_place, "exponent vectors use finite places only");
  }
  std::erase_if(exps, [](const auto& kv) { return kv.second == 0; });
  return ValuationVector(std::move(s), std::move(exps));
}

bool ValuationVector::operator==(const ValuationVector& o) const {
  require_same_spec(*spec_, *o.spec_);
  return exps_ == o.exps_;
}

ValuationVector vv_add(const ValuationVector& a, const ValuationVector& b) {
  require_same_spec(*a.spec(), *b.spec());
  std::map<Place, std::int64_t> out = a.exponents();
  for (const auto& [v, e] : b.exponents()) out[v] += e;
  return ValuationVector::make(a.spec(), std::move(out));
}

ValuationVector vv_neg(const ValuationVector& a) {
  std::map<Place, std::int64_t> out;
  for (const auto& [v, e] : a.exponents()) out.emplace(v, -e);
  return ValuationVector::make(a.spec(), std::move(out));
}

FiniteIdele FiniteIdele::make(FiniteAdele value, FiniteAdele inverse) {
  require_same_spec(*value.spec(), *inverse.spec());
  if (value.tail().is_zero() || inverse.tail().is_zero())
    fail(errc::not_a_unit, "idele tails must be nonzero");
  // Valuations must be readable off every component; this also rules out
  // exact zero components (their valuation readout is infinite, and the
  // product check below would fail anyway).
  for (const auto& [v, c] : value.exceptional()) (void)local_valuation(c);
  for (const auto& [v, c] : inverse.exceptional()) (void)local_valuation(c);
  if (!adele_eq(adele_mul(value, inverse), FiniteAdele::one(value.spec())))
    fail(errc::invalid_argument, "stored inverse does not multiply to 1");
  return FiniteIdele(std::move(value), std::move(inverse));
}

FiniteIdele FiniteIdele::inj(const FieldElem& k) {
  if (k.is_zero()) fail(errc::not_a_unit, "0 is not an idele");
  return make(FiniteAdele::inj(k), FiniteAdele::inj(k.inv()));
}

FiniteIdele try_invert(const FiniteAdele& x) {
  if (x.tail().is_zero()) fail(errc::not_a_unit, "zero tail");
  std::map<Place, LocalElement> inv;
  auto invert_at = [&](const Place& v) {
    if (inv.count(v)) return;
    try {
      inv.emplace(v, local_inv(x.component(v)));
    } catch (const math_error& e) {
      if (e.code() == errc::not_invertible) fail(errc::not_a_unit, "zero component");
      throw;
    }
  };
  for (const auto& [v, c] : x.exceptional()) invert_at(v);
  // Places where the tail is a non-unit need an explicit inverse component;
  // elsewhere the inverse tail serves.
  for (const auto& [v, e] : finite_support(x.tail())) invert_at(v);
  return FiniteIdele::make(x, FiniteAdele::make(std::move(inv), x.tail().inv()));
}

FiniteIdele idele_mul(const FiniteIdele& x, const FiniteIdele& y) {
  return FiniteIdele::make(adele_mul(x.value(), y.value()),
                           adele_mul(x.inverse(), y.inverse()));
}

FiniteIdele idele_inv(const FiniteIdele& x) { return FiniteIdele::make(x.inverse(), x.value()); }

bool idele_eq(const FiniteIdele& x, const FiniteIdele& y) {
  return adele_eq(x.value(), y.value());
}

ValuationVector to_add_valuations(const FiniteIdele& x) {
  std::map<Place, std::int64_t> exps;
  for (const auto& [v, c] : x.value().exceptional()) exps.emplace(v, local_valuation(c).n());
  for (const auto& [v, e] : finite_support(x.value().tail()))
    if (!x.value().exceptional().count(v)) exps.emplace(v, e);
  return ValuationVector::make(x.spec(), std::move(exps));
}

bool is_in_kernel(const FiniteIdele& x) { return to_add_valuations(x).is_zero(); }

FiniteIdele preimage_idele(const ValuationVector& vv) {
  const SpecPtr& s = vv.spec();
  std::map<Place, LocalElement> val, inv;
  for (const auto& [v, e] : vv.exponents()) {
    FieldElem pi_e = felem_pow(uniformizer(v), e);
    val.emplace(v, LocalElement::from_global(v, pi_e));
    inv.emplace(v, LocalElement::from_global(v, pi_e.inv()));
  }
  return FiniteIdele::make(FiniteAdele::make(std::move(val), FieldElem::one(s)),
                           FiniteAdele::make(std::move(inv), FieldElem::one(s)));
}

Idele Idele::make(FiniteIdele finite, InfinitePart infinite) {
  // Shape first, then invertibility of the coordinate(s).
  Adele shaped = Adele::make(finite.value(), std::move(infinite));
  if (const auto* v = std::get_if<std::vector<double>>(&shaped.infinite())) {
    for (double c : *v)
      if (c == 0.0) fail(errc::not_a_unit, "zero archimedean coordinate");
  } else if (const auto* z = std::get_if<std::complex<double>>(&shaped.infinite())) {
    if (*z == std::complex<double>(0.0, 0.0)) fail(errc::not_a_unit, "zero archimedean coordinate");
  } else if (local_valuation(std::get<LocalElement>(shaped.infinite())).is_infinity()) {
    fail(errc::not_a_unit, "zero component at the 1/t place");
  }
  return Idele(std::move(finite), shaped.infinite());
}

Idele Idele::inj(const FieldElem& k) {
  if (k.is_zero()) fail(errc::not_a_unit, "0 is not an idele");
  return make(FiniteIdele::inj(k), infinite_image(k));
}

Idele full_idele_mul(const Idele& x, const Idele& y) {
  Adele prod = full_mul(Adele::make(x.finite().value(), x.infinite()),
                        Adele::make(y.finite().value(), y.infinite()));
  return Idele::make(idele_mul(x.finite(), y.finite()), prod.infinite());
}

Idele full_idele_inv(const Idele& x) {
  InfinitePart inf = x.infinite();
  if (auto* v = std::get_if<std::vector<double>>(&inf))
    for (double& c : *v) c = 1.0 / c;
  else if (auto* z = std::get_if<std::complex<double>>(&inf))
    *z = 1.0 / *z;
  else
    inf = local_inv(std::get<LocalElement>(inf));
  return Idele::make(idele_inv(x.finite()), std::move(inf));
}

bool full_idele_eq(const Idele& x, const Idele& y) {
  return full_eq(Adele::make(x.finite().value(), x.infinite()),
                 Adele::make(y.finite().value(), y.infinite()));
}

FiniteIdele project_to_finite(const Idele& x) { return x.finite(); }

bool is_in_kernel(const Idele& x) { return is_in_kernel(x.finite()); }

}  // namespace adelic
