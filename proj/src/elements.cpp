#include "adelic/elements.hpp"

#include <cmath>
#include <utility>

namespace adelic {

QuadInt quad_mul(const FieldSpec& s, const QuadInt& x, const QuadInt& y) {
  // omega^2 = Tr(omega) omega - N(omega).
  mpz_class bb = x.b * y.b;
  QuadInt r;
  r.a = x.a * y.a - s.omega_norm() * bb;
  r.b = x.a * y.b + x.b * y.a + s.omega_trace() * bb;
  return r;
}

QuadInt quad_conj(const FieldSpec& s, const QuadInt& x) {
  return QuadInt{x.a + s.omega_trace() * x.b, -x.b};
}

mpz_class quad_norm(const FieldSpec& s, const QuadInt& x) {
  return x.a * x.a + s.omega_trace() * x.a * x.b + s.omega_norm() * x.b * x.b;
}

mpz_class quad_trace(const FieldSpec& s, const QuadInt& x) {
  return 2 * x.a + s.omega_trace() * x.b;
}

RingElem RingElem::from_int(const SpecPtr& s, const mpz_class& n) {
  switch (s->family()) {
    case Family::Rationals:
      return RingElem(s, n);
    case Family::Quadratic:
      return RingElem(s, QuadInt{n, 0});
    case Family::FunctionField:
      return RingElem(s, poly_const(s->fq().from_int(n)));
  }
  fail(errc::wrong_family, "bad family");
}

RingElem RingElem::quad(const SpecPtr& s, const mpz_class& a, const mpz_class& b) {
  if (!s->is_quadratic()) fail(errc::wrong_family, "quad element needs a quadratic spec");
  return RingElem(s, QuadInt{a, b});
}

RingElem RingElem::poly(const SpecPtr& s, FqPoly f) {
  if (!s->is_function_field()) fail(errc::wrong_family, "poly element needs a function field spec");
  f.trim();
  return RingElem(s, std::move(f));
}

bool RingElem::is_zero() const {
  switch (spec_->family()) {
    case Family::Rationals:
      return z() == 0;
    case Family::Quadratic:
      return quad().is_zero();
    case Family::FunctionField:
      return poly().is_zero();
  }
  return false;
}

bool RingElem::is_one() const { return *this == one(spec_); }

const mpz_class& RingElem::z() const { return std::get<mpz_class>(v_); }
const QuadInt& RingElem::quad() const { return std::get<QuadInt>(v_); }
const FqPoly& RingElem::poly() const { return std::get<FqPoly>(v_); }

RingElem RingElem::operator+(const RingElem& o) const {
  require_same_spec(*spec_, *o.spec_);
  switch (spec_->family()) {
    case Family::Rationals:
      return RingElem(spec_, mpz_class(z() + o.z()));
    case Family::Quadratic:
      return RingElem(spec_, QuadInt{quad().a + o.quad().a, quad().b + o.quad().b});
    case Family::FunctionField:
      return RingElem(spec_, poly_add(spec_->fq(), poly(), o.poly()));
  }
  fail(errc::wrong_family, "bad family");
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
  require_same_spec(*spec_, *o.spec_);
  switch (spec_->family()) {
    case Family::Rationals:
      return RingElem(spec_, mpz_class(z() * o.z()));
    case Family::Quadratic:
      return RingElem(spec_, quad_mul(*spec_, quad(), o.quad()));
    case Family::FunctionField:
      return RingElem(spec_, poly_mul(spec_->fq(), poly(), o.poly()));
  }
  fail(errc::wrong_family, "bad family");
}

RingElem RingElem::operator-() const {
  switch (spec_->family()) {
    case Family::Rationals:
      return RingElem(spec_, mpz_class(-z()));
    case Family::Quadratic:
      return RingElem(spec_, QuadInt{-quad().a, -quad().b});
    case Family::FunctionField:
      return RingElem(spec_, poly_neg(spec_->fq(), poly()));
  }
  fail(errc::wrong_family, "bad family");
}

bool RingElem::operator==(const RingElem& o) const {
  require_same_spec(*spec_, *o.spec_);
  return v_ == o.v_;
}

RingElem RingElem::conjugate() const {
  if (!spec_->is_quadratic()) return *this;
  return RingElem(spec_, quad_conj(*spec_, quad()));
}

mpz_class RingElem::norm_z() const {
  switch (spec_->family()) {
    case Family::Rationals:
      return z();
    case Family::Quadratic:
      return quad_norm(*spec_, quad());
    case Family::FunctionField:
      fail(errc::wrong_family, "norm_z undefined over F_q(t)");
  }
  fail(errc::wrong_family, "bad family");
}

FieldElem FieldElem::rational(const SpecPtr& s, const mpq_class& q) {
  switch (s->family()) {
    case Family::Rationals: {
      mpq_class c = q;
      c.canonicalize();
      return FieldElem(s, std::move(c));
    }
    case Family::Quadratic:
      return make_quad(s, QuadInt{q.get_num(), 0}, q.get_den());
    case Family::FunctionField: {
      const FqField& F = s->fq();
      return make_ff(s, poly_const(F.from_int(q.get_num())),
                     poly_const(F.from_int(q.get_den())));
    }
  }
  fail(errc::wrong_family, "bad family");
}

FieldElem FieldElem::from_int(const SpecPtr& s, const mpz_class& n) {
  return rational(s, mpq_class(n));
}

FieldElem FieldElem::from_ring(const RingElem& r) {
  const SpecPtr& s = r.spec();
  switch (s->family()) {
    case Family::Rationals:
      return FieldElem(s, mpq_class(r.z()));
    case Family::Quadratic:
      return FieldElem(s, QuadRat{r.quad(), 1});
    case Family::FunctionField:
      return FieldElem(s, FqRat{r.poly(), poly_one()});
  }
  fail(errc::wrong_family, "bad family");
}

FieldElem FieldElem::quad(const SpecPtr& s, const mpz_class& a, const mpz_class& b,
                          const mpz_class& den) {
  if (!s->is_quadratic()) fail(errc::wrong_family, "quad element needs a quadratic spec");
  return make_quad(s, QuadInt{a, b}, den);
}

FieldElem FieldElem::ff(const SpecPtr& s, FqPoly num, FqPoly den) {
  if (!s->is_function_field()) fail(errc::wrong_family, "ff element needs a function field spec");
  return make_ff(s, std::move(num), std::move(den));
}

FieldElem FieldElem::omega(const SpecPtr& s) {
  if (!s->is_quadratic()) fail(errc::wrong_family, "omega needs a quadratic spec");
  return FieldElem(s, QuadRat{QuadInt{0, 1}, 1});
}

FieldElem FieldElem::t_var(const SpecPtr& s) {
  if (!s->is_function_field()) fail(errc::wrong_family, "t needs a function field spec");
  return FieldElem(s, FqRat{poly_t(), poly_one()});
}

FieldElem FieldElem::u_gen(const SpecPtr& s) {
  if (!s->is_function_field()) fail(errc::wrong_family, "u needs a function field spec");
  return FieldElem(s, FqRat{poly_const(s->fq().gen()), poly_one()});
}

FieldElem FieldElem::make_quad(const SpecPtr& s, QuadInt num, mpz_class den) {
  if (den == 0) fail(errc::zero_element, "zero denominator");
  if (den < 0) {
    den = -den;
    num.a = -num.a;
    num.b = -num.b;
  }
  mpz_class g = gcd(gcd(num.a, num.b), den);
  if (g > 1) {
    num.a /= g;
    num.b /= g;
    den /= g;
  }
  return FieldElem(s, QuadRat{std::move(num), std::move(den)});
}

FieldElem FieldElem::make_ff(const SpecPtr& s, FqPoly num, FqPoly den) {
  const FqField& F = s->fq();
  num.trim();
  den.trim();
  if (den.is_zero()) fail(errc::zero_element, "zero denominator");
  FqPoly g = poly_gcd(F, num, den);
  if (g.degree() > 0) {
    num = poly_div_exact(F, num, g);
    den = poly_div_exact(F, den, g);
  }
  Fq lead = den.leading();
  if (lead != F.one()) {
    Fq li = F.inv(lead);
    num = poly_scale(F, li, num);
    den = poly_scale(F, li, den);
  }
  return FieldElem(s, FqRat{std::move(num), std::move(den)});
}

bool FieldElem::is_zero() const {
  switch (spec_->family()) {
    case Family::Rationals:
      return rat() == 0;
    case Family::Quadratic:
      return quad_num().is_zero();
    case Family::FunctionField:
      return ff_num().is_zero();
  }
  return false;
}

bool FieldElem::is_one() const { return *this == one(spec_); }

const mpq_class& FieldElem::rat() const { return std::get<mpq_class>(v_); }
const QuadInt& FieldElem::quad_num() const { return std::get<QuadRat>(v_).num; }
const mpz_class& FieldElem::quad_den() const { return std::get<QuadRat>(v_).den; }
const FqPoly& FieldElem::ff_num() const { return std::get<FqRat>(v_).num; }
const FqPoly& FieldElem::ff_den() const { return std::get<FqRat>(v_).den; }

FieldElem FieldElem::operator+(const FieldElem& o) const {
  require_same_spec(*spec_, *o.spec_);
  switch (spec_->family()) {
    case Family::Rationals:
      return FieldElem(spec_, mpq_class(rat() + o.rat()));
    case Family::Quadratic: {
      const QuadRat& x = std::get<QuadRat>(v_);
      const QuadRat& y = std::get<QuadRat>(o.v_);
      QuadInt num{x.num.a * y.den + y.num.a * x.den, x.num.b * y.den + y.num.b * x.den};
      return make_quad(spec_, std::move(num), x.den * y.den);
    }
    case Family::FunctionField: {
      const FqField& F = spec_->fq();
      const FqRat& x = std::get<FqRat>(v_);
      const FqRat& y = std::get<FqRat>(o.v_);
      FqPoly num = poly_add(F, poly_mul(F, x.num, y.den), poly_mul(F, y.num, x.den));
      return make_ff(spec_, std::move(num), poly_mul(F, x.den, y.den));
    }
  }
  fail(errc::wrong_family, "bad family");
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
  require_same_spec(*spec_, *o.spec_);
  switch (spec_->family()) {
    case Family::Rationals:
      return FieldElem(spec_, mpq_class(rat() * o.rat()));
    case Family::Quadratic: {
      const QuadRat& x = std::get<QuadRat>(v_);
      const QuadRat& y = std::get<QuadRat>(o.v_);
      return make_quad(spec_, quad_mul(*spec_, x.num, y.num), x.den * y.den);
    }
    case Family::FunctionField: {
      const FqField& F = spec_->fq();
      const FqRat& x = std::get<FqRat>(v_);
      const FqRat& y = std::get<FqRat>(o.v_);
      return make_ff(spec_, poly_mul(F, x.num, y.num), poly_mul(F, x.den, y.den));
    }
  }
  fail(errc::wrong_family, "bad family");
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

FieldElem FieldElem::operator-() const {
  switch (spec_->family()) {
    case Family::Rationals:
      return FieldElem(spec_, mpq_class(-rat()));
    case Family::Quadratic: {
      const QuadRat& x = std::get<QuadRat>(v_);
      return FieldElem(spec_, QuadRat{QuadInt{-x.num.a, -x.num.b}, x.den});
    }
    case Family::FunctionField: {
      const FqRat& x = std::get<FqRat>(v_);
      return FieldElem(spec_, FqRat{poly_neg(spec_->fq(), x.num), x.den});
    }
  }
  fail(errc::wrong_family, "bad family");
}

bool FieldElem::operator==(const FieldElem& o) const {
  require_same_spec(*spec_, *o.spec_);
  if (spec_->family() == Family::Quadratic) {
    const QuadRat& x = std::get<QuadRat>(v_);
    const QuadRat& y = std::get<QuadRat>(o.v_);
    return x.num == y.num && x.den == y.den;
  }
  if (spec_->family() == Family::FunctionField) {
    const FqRat& x = std::get<FqRat>(v_);
    const FqRat& y = std::get<FqRat>(o.v_);
    return x.num == y.num && x.den == y.den;
  }
  return rat() == o.rat();
}

FieldElem FieldElem::inv() const {
  if (is_zero()) fail(errc::zero_element, "inverse of zero");
  switch (spec_->family()) {
    case Family::Rationals:
      return FieldElem(spec_, mpq_class(1 / rat()));
    case Family::Quadratic: {
      // 1/(x/den) = den * conj(x) / N(x) with N(x) a nonzero integer.
      const QuadRat& x = std::get<QuadRat>(v_);
      QuadInt c = quad_conj(*spec_, x.num);
      c.a *= x.den;
      c.b *= x.den;
      return make_quad(spec_, std::move(c), quad_norm(*spec_, x.num));
    }
    case Family::FunctionField: {
      const FqRat& x = std::get<FqRat>(v_);
      return make_ff(spec_, x.den, x.num);
    }
  }
  fail(errc::wrong_family, "bad family");
}

FieldElem FieldElem::conjugate() const {
  if (!spec_->is_quadratic()) return *this;
  const QuadRat& x = std::get<QuadRat>(v_);
  return FieldElem(spec_, QuadRat{quad_conj(*spec_, x.num), x.den});
}

mpq_class FieldElem::norm_q() const {
  switch (spec_->family()) {
    case Family::Rationals:
      return rat();
    case Family::Quadratic: {
      const QuadRat& x = std::get<QuadRat>(v_);
      mpq_class n(quad_norm(*spec_, x.num), x.den * x.den);
      n.canonicalize();
      return n;
    }
    case Family::FunctionField:
      fail(errc::wrong_family, "norm_q undefined over F_q(t)");
  }
  fail(errc::wrong_family, "bad family");
}

bool FieldElem::is_integral() const {
  switch (spec_->family()) {
    case Family::Rationals:
      return rat().get_den() == 1;
    case Family::Quadratic:
      return quad_den() == 1;
    case Family::FunctionField:
      return ff_den().degree() == 0;
  }
  return false;
}

RingElem FieldElem::as_ring() const {
  if (!is_integral()) fail(errc::invalid_argument, "element is not integral");
  switch (spec_->family()) {
    case Family::Rationals:
      return RingElem::from_int(spec_, rat().get_num());
    case Family::Quadratic:
      return RingElem::quad(spec_, quad_num().a, quad_num().b);
    case Family::FunctionField:
      return RingElem::poly(spec_, ff_num());
  }
  fail(errc::wrong_family, "bad family");
}

RingElem FieldElem::numerator() const {
  switch (spec_->family()) {
    case Family::Rationals:
      return RingElem::from_int(spec_, rat().get_num());
    case Family::Quadratic:
      return RingElem::quad(spec_, quad_num().a, quad_num().b);
    case Family::FunctionField:
      return RingElem::poly(spec_, ff_num());
  }
  fail(errc::wrong_family, "bad family");
}

RingElem FieldElem::denominator() const {
  switch (spec_->family()) {
    case Family::Rationals:
      return RingElem::from_int(spec_, rat().get_den());
    case Family::Quadratic:
      return RingElem::from_int(spec_, quad_den());
    case Family::FunctionField:
      return RingElem::poly(spec_, ff_den());
  }
  fail(errc::wrong_family, "bad family");
}

FieldElem felem_pow(const FieldElem& x, std::int64_t e) {
  if (e < 0) return felem_pow(x.inv(), -e);
  FieldElem acc = FieldElem::one(x.spec());
  FieldElem base = x;
  std::uint64_t n = static_cast<std::uint64_t>(e);
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

double eval_real(const FieldElem& x, int emb_index) {
  const FieldSpec& s = *x.spec();
  if (s.is_rationals()) {
    if (emb_index != 0) fail(errc::invalid_argument, "Q has a single real embedding");
    return x.rat().get_d();
  }
  if (s.is_quadratic() && s.d() > 0) {
    if (emb_index != 0 && emb_index != 1)
      fail(errc::invalid_argument, "real quadratic embedding index must be 0 or 1");
    double sq = std::sqrt(s.disc().get_d());
    double om = (s.omega_trace() + (emb_index == 0 ? sq : -sq)) / 2.0;
    return (x.quad_num().a.get_d() + x.quad_num().b.get_d() * om) / x.quad_den().get_d();
  }
  fail(errc::archimedean_place, "no real embeddings for this field");
}

std::complex<double> eval_complex(const FieldElem& x) {
  const FieldSpec& s = *x.spec();
  if (!(s.is_quadratic() && s.d() < 0))
    fail(errc::archimedean_place, "complex embedding needs an imaginary quadratic field");
  mpz_class absD = -s.disc();
  std::complex<double> om(s.omega_trace() / 2.0, std::sqrt(absD.get_d()) / 2.0);
  std::complex<double> num(x.quad_num().a.get_d(), 0.0);
  num += std::complex<double>(x.quad_num().b.get_d(), 0.0) * om;
  return num / x.quad_den().get_d();
}

}  // namespace adelic
