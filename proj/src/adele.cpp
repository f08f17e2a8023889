#include "adelic/adele.hpp"

namespace adelic {

namespace {

// An exceptional entry that just restates the tail at a place where the tail
// is integral carries no information.
bool prunable(const LocalElement& c, const FieldElem& tail) {
  if (!c.is_exact() || c.value() != tail) return false;
  return valuation(c.place(), tail) >= Val::of(0);
}

}  // namespace

FiniteAdele FiniteAdele::make(std::map<Place, LocalElement> exceptional, FieldElem tail) {
  const SpecPtr& s = tail.spec();
  for (const auto& [v, c] : exceptional) {
    require_same_spec(*s, *v.spec());
    if (!v.is_finite()) fail(errc::archimedean_place, "finite adeles use finite places only");
    if (!(v == c.place())) fail(errc::place_mismatch, "component stored under the wrong place");
  }
  // Restricted-product invariant: every place where the tail is non-integral
  // must be exceptional. A missing one is filled in with the exact tail
  // image, which the semantics assigns to it anyway.
  if (!tail.is_zero())
    for (const auto& [v, e] : finite_support(tail))
      if (e < 0 && !exceptional.count(v)) exceptional.emplace(v, LocalElement::from_global(v, tail));
  std::erase_if(exceptional, [&](const auto& kv) { return prunable(kv.second, tail); });
  return FiniteAdele(std::move(exceptional), std::move(tail));
}

FiniteAdele FiniteAdele::inj(const FieldElem& k) { return make({}, k); }

LocalElement FiniteAdele::component(const Place& v) const {
  require_same_spec(*spec(), *v.spec());
  auto it = exceptional_.find(v);
  if (it != exceptional_.end()) return it->second;
  return LocalElement::from_global(v, tail_);
}

namespace {

FiniteAdele combine(const FiniteAdele& x, const FiniteAdele& y,
                    LocalElement (*op)(const LocalElement&, const LocalElement&),
                    FieldElem tail) {
  require_same_spec(*x.spec(), *y.spec());
  std::map<Place, LocalElement> out;
  for (const auto& [v, c] : x.exceptional()) out.emplace(v, op(c, y.component(v)));
  for (const auto& [v, c] : y.exceptional())
    if (!out.count(v)) out.emplace(v, op(x.component(v), c));
  return FiniteAdele::make(std::move(out), std::move(tail));
}

}  // namespace

FiniteAdele adele_add(const FiniteAdele& x, const FiniteAdele& y) {
  return combine(x, y, &local_add, x.tail() + y.tail());
}

FiniteAdele adele_mul(const FiniteAdele& x, const FiniteAdele& y) {
  return combine(x, y, &local_mul, x.tail() * y.tail());
}

FiniteAdele adele_neg(const FiniteAdele& x) {
  std::map<Place, LocalElement> out;
  for (const auto& [v, c] : x.exceptional()) out.emplace(v, local_neg(c));
  return FiniteAdele::make(std::move(out), -x.tail());
}

bool adele_eq(const FiniteAdele& x, const FiniteAdele& y) {
  require_same_spec(*x.spec(), *y.spec());
  // Off the exceptional sets both sides are their tails, and two distinct
  // tails differ at infinitely many places; so tail equality is necessary.
  if (x.tail() != y.tail()) return false;
  for (const auto& [v, c] : x.exceptional())
    if (!coset_eq(c, y.component(v))) return false;
  for (const auto& [v, c] : y.exceptional())
    if (!x.exceptional().count(v) && !coset_eq(x.component(v), c)) return false;
  return true;
}

bool is_in_basic_open(const FiniteAdele& x, const BasicOpenSpec& U) {
  for (const auto& [v, ball] : U.constraints) {
    require_same_spec(*x.spec(), *v.spec());
    if (!v.is_finite()) fail(errc::archimedean_place, "balls sit at finite places");
    LocalElement diff = local_sub(x.component(v), LocalElement::from_global(v, ball.center));
    Val w = valuation(v, diff.value());
    if (diff.is_exact() || w < Val::of(diff.prec())) {
      if (w < Val::of(ball.radius)) return false;
    } else if (diff.prec() < ball.radius) {
      // All that is known is v(x - center) >= prec < radius.
      fail(errc::insufficient_precision, "ball membership undecidable at stored precision");
    }
  }
  // Everywhere else the condition is membership in R_v; non-exceptional
  // places satisfy it through the tail invariant.
  for (const auto& [v, c] : x.exceptional())
    if (!U.constraints.count(v) && !is_integer(c)) return false;
  return true;
}

LocalizationForm to_localization_form(const FiniteAdele& x) {
  RingElem s = x.tail().denominator();
  for (const auto& [v, c] : x.exceptional()) s = s * c.value().denominator();
  // s is divisible by every representative's denominator, so multiplying by
  // it leaves integral values (and only raises precisions).
  FieldElem sk = FieldElem::from_ring(s);
  std::map<Place, LocalElement> num;
  for (const auto& [v, c] : x.exceptional())
    num.emplace(v, local_mul(c, LocalElement::from_global(v, sk)));
  return LocalizationForm{std::move(num), (x.tail() * sk).as_ring(), std::move(s)};
}

FiniteAdele from_localization_form(const LocalizationForm& l) {
  if (l.denominator.is_zero()) fail(errc::zero_element, "localization denominator must be nonzero");
  FieldElem sk = FieldElem::from_ring(l.denominator);
  FieldElem sk_inv = sk.inv();
  std::map<Place, LocalElement> out;
  for (const auto& [v, c] : l.numerator_exceptional) {
    if (!is_integer(c)) fail(errc::invalid_argument, "localization numerators must be integral");
    out.emplace(v, local_mul(c, LocalElement::from_global(v, sk_inv)));
  }
  return FiniteAdele::make(std::move(out), FieldElem::from_ring(l.numerator_tail) * sk_inv);
}

namespace {

LocalElement lf_component(const LocalizationForm& l, const Place& v) {
  auto it = l.numerator_exceptional.find(v);
  if (it != l.numerator_exceptional.end()) return it->second;
  return LocalElement::from_global(v, FieldElem::from_ring(l.numerator_tail));
}

}  // namespace

LocalizationForm lf_add(const LocalizationForm& a, const LocalizationForm& b) {
  // n_a/s_a + n_b/s_b = (n_a s_b + n_b s_a) / (s_a s_b), componentwise over
  // the union of the exceptional sets.
  FieldElem sa = FieldElem::from_ring(a.denominator);
  FieldElem sb = FieldElem::from_ring(b.denominator);
  std::map<Place, LocalElement> num;
  auto emit = [&](const Place& v) {
    if (num.count(v)) return;
    LocalElement left = local_mul(lf_component(a, v), LocalElement::from_global(v, sb));
    LocalElement right = local_mul(lf_component(b, v), LocalElement::from_global(v, sa));
    num.emplace(v, local_add(left, right));
  };
  for (const auto& [v, c] : a.numerator_exceptional) emit(v);
  for (const auto& [v, c] : b.numerator_exceptional) emit(v);
  return LocalizationForm{std::move(num),
                          a.numerator_tail * b.denominator + b.numerator_tail * a.denominator,
                          a.denominator * b.denominator};
}

LocalizationForm lf_mul(const LocalizationForm& a, const LocalizationForm& b) {
  std::map<Place, LocalElement> num;
  auto emit = [&](const Place& v) {
    if (!num.count(v)) num.emplace(v, local_mul(lf_component(a, v), lf_component(b, v)));
  };
  for (const auto& [v, c] : a.numerator_exceptional) emit(v);
  for (const auto& [v, c] : b.numerator_exceptional) emit(v);
  return LocalizationForm{std::move(num), a.numerator_tail * b.numerator_tail,
                          a.denominator * b.denominator};
}

InfinitePart infinite_image(const FieldElem& k) {
  const SpecPtr& s = k.spec();
  switch (s->family()) {
    case Family::Rationals:
      return std::vector<double>{eval_real(k, 0)};
    case Family::Quadratic:
      if (s->d() > 0) return std::vector<double>{eval_real(k, 0), eval_real(k, 1)};
      return eval_complex(k);
    case Family::FunctionField:
      return LocalElement::from_global(Place::ff_infinity(s), k);
  }
  fail(errc::wrong_family, "bad family");
}

Adele Adele::make(FiniteAdele finite, InfinitePart infinite) {
  const SpecPtr& s = finite.spec();
  bool ok = false;
  switch (s->family()) {
    case Family::Rationals:
      ok = std::holds_alternative<std::vector<double>>(infinite) &&
           std::get<std::vector<double>>(infinite).size() == 1;
      break;
    case Family::Quadratic:
      if (s->d() > 0)
        ok = std::holds_alternative<std::vector<double>>(infinite) &&
             std::get<std::vector<double>>(infinite).size() == 2;
      else
        ok = std::holds_alternative<std::complex<double>>(infinite);
      break;
    case Family::FunctionField:
      if (const auto* le = std::get_if<LocalElement>(&infinite)) {
        require_same_spec(*s, *le->place().spec());
        ok = le->place().kind() == PlaceKind::FFInfinity;
      }
      break;
  }
  if (!ok) fail(errc::shape_mismatch, "archimedean part has the wrong shape for this field");
  return Adele(std::move(finite), std::move(infinite));
}

Adele Adele::inj(const FieldElem& k) { return make(FiniteAdele::inj(k), infinite_image(k)); }

namespace {

InfinitePart inf_combine(const InfinitePart& a, const InfinitePart& b, bool multiply) {
  if (const auto* va = std::get_if<std::vector<double>>(&a)) {
    const auto& vb = std::get<std::vector<double>>(b);
    std::vector<double> out(va->size());
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = multiply ? (*va)[i] * vb[i] : (*va)[i] + vb[i];
    return out;
  }
  if (const auto* ca = std::get_if<std::complex<double>>(&a)) {
    const auto& cb = std::get<std::complex<double>>(b);
    return multiply ? *ca * cb : *ca + cb;
  }
  const auto& la = std::get<LocalElement>(a);
  const auto& lb = std::get<LocalElement>(b);
  return multiply ? local_mul(la, lb) : local_add(la, lb);
}

}  // namespace

Adele full_add(const Adele& x, const Adele& y) {
  return Adele::make(adele_add(x.finite(), y.finite()),
                     inf_combine(x.infinite(), y.infinite(), false));
}

Adele full_mul(const Adele& x, const Adele& y) {
  return Adele::make(adele_mul(x.finite(), y.finite()),
                     inf_combine(x.infinite(), y.infinite(), true));
}

Adele full_neg(const Adele& x) {
  InfinitePart inf = x.infinite();
  if (auto* v = std::get_if<std::vector<double>>(&inf))
    for (double& c : *v) c = -c;
  else if (auto* c = std::get_if<std::complex<double>>(&inf))
    *c = -*c;
  else
    inf = local_neg(std::get<LocalElement>(inf));
  return Adele::make(adele_neg(x.finite()), std::move(inf));
}

bool full_eq(const Adele& x, const Adele& y) {
  if (!adele_eq(x.finite(), y.finite())) return false;
  if (const auto* va = std::get_if<std::vector<double>>(&x.infinite())) {
    const auto& vb = std::get<std::vector<double>>(y.infinite());
    for (std::size_t i = 0; i < va->size(); ++i)
      if (std::abs((*va)[i] - vb[i]) > kArchTolerance) return false;
    return true;
  }
  if (const auto* ca = std::get_if<std::complex<double>>(&x.infinite()))
    return std::abs(*ca - std::get<std::complex<double>>(y.infinite())) <= kArchTolerance;
  return coset_eq(std::get<LocalElement>(x.infinite()), std::get<LocalElement>(y.infinite()));
}

}  // namespace adelic
