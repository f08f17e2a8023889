#include "adelic/classgroup.hpp"

#include <algorithm>

namespace adelic {

namespace {

mpz_class pow_mpz(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

void require_imaginary_quadratic(const SpecPtr& s) {
  if (!s->is_quadratic() || s->d() > 0)
    fail(errc::unsupported_field, "imaginary quadratic fields only");
}

// b into (-a, a], c recomputed from the fixed discriminant.
void normalize_form(QuadForm& f, const mpz_class& D) {
  mpz_class twoa = 2 * f.a;
  mpz_class b = ((f.b % twoa) + twoa) % twoa;
  if (b > f.a) b -= twoa;
  f.b = b;
  f.c = (f.b * f.b - D) / (4 * f.a);
}

// The form attached to the primitive part of an HNF ideal, and back.
QuadForm form_of_primitive(const SpecPtr& s, const mpz_class& a0, const mpz_class& b0) {
  const mpz_class& t = s->omega_trace();
  const mpz_class& n = s->omega_norm();
  return QuadForm{a0, 2 * b0 + t, (b0 * b0 + t * b0 + n) / a0};
}

IntegralIdeal primitive_ideal_of_form(const SpecPtr& s, const QuadForm& f) {
  mpz_class bp = (f.b - s->omega_trace()) / 2;
  mpz_class bm = ((bp % f.a) + f.a) % f.a;
  return IntegralIdeal::from_hnf(s, f.a, bm, 1);
}

}  // namespace

mpz_class form_discriminant(const QuadForm& f) { return f.b * f.b - 4 * f.a * f.c; }

QuadForm principal_form(const SpecPtr& s) {
  require_imaginary_quadratic(s);
  const mpz_class& D = s->disc();
  if (D % 2 == 0) return QuadForm{1, 0, -D / 4};
  return QuadForm{1, 1, (1 - D) / 4};
}

QuadForm reduce_form(QuadForm f) {
  mpz_class D = form_discriminant(f);
  if (D >= 0 || f.a <= 0) fail(errc::invalid_argument, "positive definite forms only");
  normalize_form(f, D);
  while (f.a > f.c) {
    f = QuadForm{f.c, -f.b, f.a};
    normalize_form(f, D);
  }
  if (f.b < 0 && (-f.b == f.a || f.a == f.c)) f.b = -f.b;
  return f;
}

std::vector<QuadForm> reduced_forms(const mpz_class& D) {
  if (D >= 0) fail(errc::invalid_argument, "negative discriminants only");
  mpz_class r = ((D % 4) + 4) % 4;
  if (r != 0 && r != 1) fail(errc::invalid_argument, "not a discriminant");
  std::vector<QuadForm> out;
  for (mpz_class b = (r == 0 ? 0 : 1); 3 * b * b <= -D; b += 2) {
    mpz_class m = (b * b - D) / 4;
    for (mpz_class a = (b > 1 ? b : 1); a * a <= m; ++a) {
      if (m % a != 0) continue;
      mpz_class c = m / a;
      out.push_back(QuadForm{a, b, c});
      if (b > 0 && b < a && a < c) out.push_back(QuadForm{a, -b, c});
    }
  }
  std::sort(out.begin(), out.end(), [](const QuadForm& x, const QuadForm& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b > y.b;
    return x.c < y.c;
  });
  return out;
}

FractionalIdeal FractionalIdeal::from_exponents(const SpecPtr& s,
                                                std::map<Place, std::int64_t> exps) {
  std::erase_if(exps, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [v, e] : exps) {
    require_same_spec(*s, *v.spec());
    if (!v.is_finite()) fail(errc::archimedean_place, "fractional ideals live at finite places");
  }
  RingElem a = RingElem::one(s);
  IntegralIdeal J = IntegralIdeal::unit_ideal(s);
  switch (s->family()) {
    case Family::Rationals: {
      mpz_class av = 1, jv = 1;
      for (const auto& [v, e] : exps)
        (e > 0 ? jv : av) *= pow_mpz(v.p(), static_cast<unsigned long>(e > 0 ? e : -e));
      a = RingElem::from_int(s, av);
      J = IntegralIdeal::principal(RingElem::from_int(s, jv));
      break;
    }
    case Family::FunctionField: {
      const FqField& F = s->fq();
      FqPoly av = poly_one(), jv = poly_one();
      for (const auto& [v, e] : exps) {
        FqPoly pk = poly_pow(F, v.poly(), static_cast<unsigned long>(e > 0 ? e : -e));
        if (e > 0)
          jv = poly_mul(F, jv, pk);
        else
          av = poly_mul(F, av, pk);
      }
      a = RingElem::poly(s, av);
      J = IntegralIdeal::principal(RingElem::poly(s, jv));
      break;
    }
    case Family::Quadratic: {
      // The denominator has to be a rational integer: clear each negative
      // exponent with the smallest power of the underlying prime.
      std::map<mpz_class, long> clearing;
      for (const auto& [v, e] : exps)
        if (e < 0) {
          long ram = v.ramification_index();
          long need = static_cast<long>((-e + ram - 1) / ram);
          long& cur = clearing[v.p()];
          if (need > cur) cur = need;
        }
      mpz_class av = 1;
      std::map<Place, std::int64_t> jexp = exps;
      for (const auto& [p, m] : clearing) {
        av *= pow_mpz(p, static_cast<unsigned long>(m));
        for (const Place& v : primes_above(s, p)) jexp[v] += m * v.ramification_index();
      }
      a = RingElem::from_int(s, av);
      for (const auto& [v, e] : jexp) {
        if (e == 0) continue;
        if (e < 0) fail(errc::invalid_argument, "internal: denominator clearing failed");
        J = ideal_mul(J, ideal_pow(place_ideal(v), static_cast<int>(e)));
      }
      break;
    }
  }
  return FractionalIdeal(s, std::move(a), std::move(J), std::move(exps));
}

FractionalIdeal FractionalIdeal::from_pair(const RingElem& a, const IntegralIdeal& J) {
  require_same_spec(*a.spec(), *J.spec());
  if (a.is_zero()) fail(errc::zero_element, "denominator must be nonzero");
  std::map<Place, std::int64_t> exps;
  for (const auto& [v, e] : factor_ideal(J)) exps[v] += e;
  for (const auto& [v, e] : factor_ideal(IntegralIdeal::principal(a))) exps[v] -= e;
  return from_exponents(a.spec(), std::move(exps));
}

FractionalIdeal FractionalIdeal::from_integral(const IntegralIdeal& J) {
  return from_pair(RingElem::one(J.spec()), J);
}

FractionalIdeal FractionalIdeal::principal(const FieldElem& k) {
  if (k.is_zero()) fail(errc::zero_ideal, "the zero module is not a fractional ideal");
  return from_exponents(k.spec(), finite_support(k));
}

FractionalIdeal frac_mul(const FractionalIdeal& x, const FractionalIdeal& y) {
  require_same_spec(*x.spec(), *y.spec());
  std::map<Place, std::int64_t> exps = x.exponents();
  for (const auto& [v, e] : y.exponents()) exps[v] += e;
  return FractionalIdeal::from_exponents(x.spec(), std::move(exps));
}

FractionalIdeal frac_inv(const FractionalIdeal& x) {
  std::map<Place, std::int64_t> exps;
  for (const auto& [v, e] : x.exponents()) exps.emplace(v, -e);
  return FractionalIdeal::from_exponents(x.spec(), std::move(exps));
}

bool frac_eq(const FractionalIdeal& x, const FractionalIdeal& y) {
  require_same_spec(*x.spec(), *y.spec());
  return x.exponents() == y.exponents();
}

ValuationVector frac_factorization(const FractionalIdeal& I) {
  return ValuationVector::make(I.spec(), I.exponents());
}

std::optional<FieldElem> is_principal(const FractionalIdeal& I) {
  const SpecPtr& s = I.spec();
  switch (s->family()) {
    case Family::Rationals: {
      mpq_class g = 1;
      for (const auto& [v, e] : I.exponents()) {
        mpq_class pe(pow_mpz(v.p(), static_cast<unsigned long>(e > 0 ? e : -e)));
        if (e > 0)
          g *= pe;
        else
          g /= pe;
      }
      return FieldElem::rational(s, g);
    }
    case Family::FunctionField: {
      const FqField& F = s->fq();
      FqPoly num = poly_one(), den = poly_one();
      for (const auto& [v, e] : I.exponents()) {
        FqPoly pk = poly_pow(F, v.poly(), static_cast<unsigned long>(e > 0 ? e : -e));
        if (e > 0)
          num = poly_mul(F, num, pk);
        else
          den = poly_mul(F, den, pk);
      }
      return FieldElem::ff(s, num, den);
    }
    case Family::Quadratic: {
      if (s->d() > 0) fail(errc::unsupported_field, "real quadratic principality is out of scope");
      // J = content * (Z a0 + Z (b0 + omega)). Reduce the form of the
      // primitive part; each rotation scales the ideal by conj(b0 + omega)/a0,
      // and the principal form means the scaled ideal is R itself.
      const IntegralIdeal& J = I.ideal_part();
      mpz_class content = J.hnf_c();
      mpz_class a0 = J.hnf_a() / content;
      mpz_class b0 = J.hnf_b() / content;
      mpz_class D = s->disc();
      QuadForm f = form_of_primitive(s, a0, b0);
      FieldElem scale = FieldElem::one(s);
      normalize_form(f, D);
      while (f.a > f.c) {
        mpz_class bp = (f.b - s->omega_trace()) / 2;
        FieldElem beta_bar = FieldElem::quad(s, bp + s->omega_trace(), -1, 1);
        scale = scale * beta_bar / FieldElem::quad(s, f.a, 0, 1);
        f = QuadForm{f.c, -f.b, f.a};
        normalize_form(f, D);
      }
      // No boundary fix needed: a = 1 forces b into {0, 1} already, and
      // other reduced forms are nonprincipal regardless of the sign of b.
      if (!(f == principal_form(s))) return std::nullopt;
      FieldElem gen =
          FieldElem::quad(s, content, 0, 1) / scale / FieldElem::from_ring(I.denom());
      if (!frac_eq(FractionalIdeal::principal(gen), I))
        fail(errc::invalid_argument, "principal generator verification failed");
      return gen;
    }
  }
  fail(errc::wrong_family, "bad family");
}

FractionalIdeal map_to_fractional_ideals(const FiniteIdele& x) {
  return FractionalIdeal::from_exponents(x.spec(), to_add_valuations(x).exponents());
}

FiniteIdele preimage_idele(const FractionalIdeal& I) {
  return preimage_idele(ValuationVector::make(I.spec(), I.exponents()));
}

IdealClass IdealClass::trivial(const SpecPtr& s) {
  if (s->is_quadratic()) return of_form(s, principal_form(s));
  return IdealClass(s, std::nullopt);
}

IdealClass IdealClass::of_form(const SpecPtr& s, const QuadForm& f) {
  require_imaginary_quadratic(s);
  if (form_discriminant(f) != s->disc()) fail(errc::spec_mismatch, "form of the wrong discriminant");
  return IdealClass(s, reduce_form(f));
}

const QuadForm& IdealClass::form() const {
  if (!form_) fail(errc::wrong_family, "no form attached over a principal ideal domain");
  return *form_;
}

bool IdealClass::is_principal_class() const {
  return !form_ || *form_ == principal_form(spec_);
}

bool IdealClass::operator==(const IdealClass& o) const {
  require_same_spec(*spec_, *o.spec_);
  return form_ == o.form_;
}

IdealClass class_of_ideal(const FractionalIdeal& I) {
  const SpecPtr& s = I.spec();
  if (!s->is_quadratic()) return IdealClass::trivial(s);
  require_imaginary_quadratic(s);
  // The denominator is principal, so only the integral part decides the class.
  const IntegralIdeal& J = I.ideal_part();
  mpz_class content = J.hnf_c();
  return IdealClass::of_form(s, form_of_primitive(s, J.hnf_a() / content, J.hnf_b() / content));
}

ClassGroup ClassGroup::of(const SpecPtr& s) {
  require_imaginary_quadratic(s);
  std::vector<QuadForm> forms = reduced_forms(s->disc());
  int h = static_cast<int>(forms.size());
  auto index_of_form = [&](const QuadForm& f) {
    for (int k = 0; k < h; ++k)
      if (forms[k] == f) return k;
    fail(errc::invalid_argument, "internal: composed form missing from the reduced list");
  };
  std::vector<std::vector<int>> table(h, std::vector<int>(h, 0));
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      IntegralIdeal prod = ideal_mul(primitive_ideal_of_form(s, forms[i]),
                                     primitive_ideal_of_form(s, forms[j]));
      table[i][j] = index_of_form(class_of_ideal(FractionalIdeal::from_integral(prod)).form());
    }
  return ClassGroup(s, std::move(forms), std::move(table));
}

int ClassGroup::index_of(const IdealClass& c) const {
  require_same_spec(*spec_, *c.spec());
  for (int k = 0; k < order(); ++k)
    if (forms_[k] == c.form()) return k;
  fail(errc::invalid_argument, "class does not belong to this group");
}

std::vector<FieldElem> ring_units(const SpecPtr& s) {
  FieldElem one = FieldElem::one(s);
  switch (s->family()) {
    case Family::Rationals:
      return {one, -one};
    case Family::FunctionField: {
      std::vector<FieldElem> out;
      for (Fq c = 1; c < s->fq().q(); ++c)
        out.push_back(FieldElem::ff(s, poly_const(c), poly_one()));
      return out;
    }
    case Family::Quadratic: {
      if (s->d() > 0) fail(errc::unsupported_field, "infinite unit group");
      std::vector<FieldElem> out = {one, -one};
      if (s->d() == -1) {
        FieldElem w = FieldElem::omega(s);
        out.push_back(w);
        out.push_back(-w);
      } else if (s->d() == -3) {
        // Sixth roots of unity: +-1, +-omega, +-(omega - 1).
        FieldElem w = FieldElem::omega(s);
        for (const FieldElem& u : {w, -w, w - one, one - w}) out.push_back(u);
      }
      return out;
    }
  }
  fail(errc::wrong_family, "bad family");
}

IdealClass idele_class_to_ideal_class(const IdeleClass& x) {
  return class_of_ideal(map_to_fractional_ideals(project_to_finite(x.representative())));
}

IdeleClass ideal_class_section(const IdealClass& c) {
  const SpecPtr& s = c.spec();
  FractionalIdeal rep = s->is_quadratic()
                            ? FractionalIdeal::from_integral(primitive_ideal_of_form(s, c.form()))
                            : FractionalIdeal::unit(s);
  return IdeleClass::of(Idele::make(preimage_idele(rep), infinite_image(FieldElem::one(s))));
}

std::optional<KernelWitness> kernel_subgroup_witness(const IdeleClass& x) {
  std::optional<FieldElem> g =
      is_principal(map_to_fractional_ideals(project_to_finite(x.representative())));
  if (!g) return std::nullopt;
  Idele u = full_idele_mul(x.representative(), full_idele_inv(Idele::inj(*g)));
  if (!is_in_kernel(u)) fail(errc::invalid_argument, "internal: witness fails the kernel test");
  return KernelWitness{std::move(u), std::move(*g)};
}

bool is_in_kernel_subgroup(const IdeleClass& x) { return kernel_subgroup_witness(x).has_value(); }

namespace {

bool infinite_matches(const InfinitePart& inf, const FieldElem& mu) {
  InfinitePart target = infinite_image(mu);
  if (const auto* v = std::get_if<std::vector<double>>(&inf)) {
    const auto& w = std::get<std::vector<double>>(target);
    for (std::size_t i = 0; i < v->size(); ++i)
      if (std::abs((*v)[i] - w[i]) > kArchTolerance) return false;
    return true;
  }
  if (const auto* z = std::get_if<std::complex<double>>(&inf))
    return std::abs(*z - std::get<std::complex<double>>(target)) <= kArchTolerance;
  return coset_eq(std::get<LocalElement>(inf), std::get<LocalElement>(target));
}

}  // namespace

bool idele_class_eq(const IdeleClass& x, const IdeleClass& y) {
  Idele z = full_idele_mul(x.representative(), full_idele_inv(y.representative()));
  std::optional<FieldElem> g = is_principal(map_to_fractional_ideals(project_to_finite(z)));
  if (!g) return false;
  Idele u = full_idele_mul(z, full_idele_inv(Idele::inj(*g)));
  if (!is_in_kernel(u)) return false;
  // The generator is determined up to a unit of R, so accept any torsion
  // unit at the infinite coordinates.
  for (const FieldElem& mu : ring_units(x.spec()))
    if (infinite_matches(u.infinite(), mu)) return true;
  return false;
}

}  // namespace adelic
