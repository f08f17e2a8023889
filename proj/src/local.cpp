#include "adelic/local.hpp"

namespace adelic {

namespace {

void require_nonarchimedean(const Place& v) {
  if (v.is_archimedean())
    fail(errc::archimedean_place, "completions are tracked at nonarchimedean places only");
}

void require_same_place(const LocalElement& x, const LocalElement& y) {
  if (x.place() != y.place()) fail(errc::place_mismatch, "operands live in different completions");
}

// Provable lower bound for the valuation of the coset: min(v(approx), prec).
// For a canonical element this is v(approx) unless the representative is 0.
Val low_bound(const LocalElement& x) {
  Val va = valuation(x.place(), x.value());
  if (x.is_exact()) return va;
  return Val::min(va, Val::of(x.prec()));
}

Val prec_val(const LocalElement& x) {
  return x.is_exact() ? Val::infinity() : Val::of(x.prec());
}

LocalElement make(const Place& v, const FieldElem& a, const Val& prec) {
  if (prec.is_infinity()) return LocalElement::from_global(v, a);
  if (prec < Val::of(1))
    fail(errc::insufficient_precision, "operation result would be a vacuous coset");
  return LocalElement::coset(v, a, prec.n());
}

}  // namespace

LocalElement::LocalElement(Place v, FieldElem x, std::optional<std::int64_t> prec)
    : place_(std::move(v)), approx_(std::move(x)), prec_(prec) {
  require_nonarchimedean(place_);
  require_same_spec(*place_.spec(), *approx_.spec());
  if (prec_) {
    if (*prec_ < 1) fail(errc::invalid_argument, "finite precision must be >= 1");
    if (valuation(place_, approx_) >= Val::of(*prec_)) approx_ = FieldElem::zero(approx_.spec());
  }
}

LocalElement LocalElement::from_global(const Place& v, const FieldElem& x) {
  return LocalElement(v, x, std::nullopt);
}

LocalElement LocalElement::coset(const Place& v, const FieldElem& x, std::int64_t prec) {
  return LocalElement(v, x, prec);
}

std::int64_t LocalElement::prec() const {
  if (!prec_) fail(errc::invalid_argument, "exact element has no finite precision");
  return *prec_;
}

LocalElement LocalElement::truncated(std::int64_t prec) const {
  if (prec_ && prec > *prec_)
    fail(errc::invalid_argument, "cannot raise precision by truncation");
  return LocalElement(place_, approx_, prec);
}

LocalElement local_add(const LocalElement& x, const LocalElement& y) {
  require_same_place(x, y);
  return make(x.place(), x.value() + y.value(), Val::min(prec_val(x), prec_val(y)));
}

LocalElement local_sub(const LocalElement& x, const LocalElement& y) {
  return local_add(x, local_neg(y));
}

LocalElement local_neg(const LocalElement& x) {
  return make(x.place(), -x.value(), prec_val(x));
}

LocalElement local_mul(const LocalElement& x, const LocalElement& y) {
  require_same_place(x, y);
  // Perturbations: (x + eps_x)(y + eps_y) moves by eps_x y + eps_y x + eps_x
  // eps_y, so the product is pinned mod m^min(px + vy, py + vx).
  Val p = Val::min(prec_val(x) + low_bound(y), prec_val(y) + low_bound(x));
  return make(x.place(), x.value() * y.value(), p);
}

LocalElement local_inv(const LocalElement& x) {
  if (x.is_exact()) {
    if (x.value().is_zero()) fail(errc::not_invertible, "zero is not invertible");
    return LocalElement::from_global(x.place(), x.value().inv());
  }
  if (x.value().is_zero())
    fail(errc::insufficient_precision,
         "representative is 0 mod m^prec; the valuation is only bounded below");
  std::int64_t v = valuation(x.place(), x.value()).n();
  Val p = Val::of(x.prec() - 2 * v);
  return make(x.place(), x.value().inv(), p);
}

Val local_valuation(const LocalElement& x) {
  Val va = valuation(x.place(), x.value());
  if (x.is_exact()) return va;
  if (va >= Val::of(x.prec()))
    fail(errc::insufficient_precision,
         "representative is 0 mod m^prec; the valuation is only bounded below");
  return va;
}

bool is_integer(const LocalElement& x) {
  // A canonical zero representative at finite precision means v >= prec >= 1.
  return low_bound(x) >= Val::of(0);
}

bool coset_eq(const LocalElement& x, const LocalElement& y) {
  require_same_place(x, y);
  if (x.is_exact() && y.is_exact()) return x.value() == y.value();
  Val joint = Val::min(prec_val(x), prec_val(y));
  return valuation(x.place(), x.value() - y.value()) >= joint;
}

LocalIntegerWitness integer_witness(const LocalElement& x) {
  Val lb = low_bound(x);
  if (lb < Val::of(0)) fail(errc::invalid_argument, "element is not in R_v");
  return LocalIntegerWitness{x, lb};
}

}  // namespace adelic
