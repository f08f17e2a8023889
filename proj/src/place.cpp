#include "adelic/place.hpp"

#include <tuple>

#include "adelic/intfactor.hpp"

namespace adelic {

Place Place::rational_prime(const SpecPtr& s, const mpz_class& p) {
  if (!s->is_rationals()) fail(errc::wrong_family, "rational prime place needs spec Q");
  if (!is_prime(p)) fail(errc::not_prime, p.get_str() + " is not prime");
  Place v(s);
  v.kind_ = PlaceKind::Finite;
  v.p_ = p;
  return v;
}

Place Place::quad_prime(const SpecPtr& s, const mpz_class& p, QuadSplit split,
                        const mpz_class& root) {
  if (!s->is_quadratic()) fail(errc::wrong_family, "quadratic place needs spec Q(sqrt d)");
  if (!is_prime(p)) fail(errc::not_prime, p.get_str() + " is not prime");
  Place v(s);
  v.kind_ = PlaceKind::Finite;
  v.p_ = p;
  v.split_ = split;
  if (split != QuadSplit::Inert) v.root_ = ((root % p) + p) % p;
  return v;
}

Place Place::ff_prime(const SpecPtr& s, const FqPoly& poly) {
  if (!s->is_function_field()) fail(errc::wrong_family, "polynomial place needs spec F_q(t)");
  FqPoly m = poly_monic(s->fq(), poly);
  if (m.degree() < 1 || !poly_is_irreducible(s->fq(), m))
    fail(errc::not_prime, "place polynomial must be irreducible");
  Place v(s);
  v.kind_ = PlaceKind::Finite;
  v.p_ = s->fq().p();
  v.poly_ = std::move(m);
  return v;
}

Place Place::ff_infinity(const SpecPtr& s) {
  if (!s->is_function_field()) fail(errc::wrong_family, "the 1/t place needs spec F_q(t)");
  Place v(s);
  v.kind_ = PlaceKind::FFInfinity;
  return v;
}

Place Place::arch_real(const SpecPtr& s, int emb_index) {
  bool ok = (s->is_rationals() && emb_index == 0) ||
            (s->is_quadratic() && s->d() > 0 && (emb_index == 0 || emb_index == 1));
  if (!ok) fail(errc::archimedean_place, "no such real place");
  Place v(s);
  v.kind_ = PlaceKind::ArchReal;
  v.emb_index_ = emb_index;
  return v;
}

Place Place::arch_complex(const SpecPtr& s) {
  if (!(s->is_quadratic() && s->d() < 0))
    fail(errc::archimedean_place, "no complex place for this field");
  Place v(s);
  v.kind_ = PlaceKind::ArchComplex;
  return v;
}

int Place::ramification_index() const {
  return split_ == QuadSplit::Ramified ? 2 : 1;
}

int Place::residue_degree() const {
  if (split_ == QuadSplit::Inert) return 2;
  if (spec_->is_function_field() && kind_ == PlaceKind::Finite) return poly_.degree();
  return 1;
}

bool Place::operator==(const Place& o) const {
  require_same_spec(*spec_, *o.spec_);
  return kind_ == o.kind_ && p_ == o.p_ && split_ == o.split_ && root_ == o.root_ &&
         poly_ == o.poly_ && emb_index_ == o.emb_index_;
}

bool Place::operator<(const Place& o) const {
  require_same_spec(*spec_, *o.spec_);
  auto rank = [](PlaceKind k) {
    switch (k) {
      case PlaceKind::Finite: return 0;
      case PlaceKind::FFInfinity: return 1;
      case PlaceKind::ArchReal: return 2;
      case PlaceKind::ArchComplex: return 3;
    }
    return 4;
  };
  if (rank(kind_) != rank(o.kind_)) return rank(kind_) < rank(o.kind_);
  if (kind_ == PlaceKind::ArchReal) return emb_index_ < o.emb_index_;
  if (kind_ != PlaceKind::Finite) return false;
  if (spec_->is_function_field()) return poly_ < o.poly_;
  if (p_ != o.p_) return p_ < o.p_;
  // Within one prime: the split/ramified root orders places, inert sorts last.
  mpz_class a = split_ == QuadSplit::Inert ? p_ : root_;
  mpz_class b = o.split_ == QuadSplit::Inert ? o.p_ : o.root_;
  return a < b;
}

std::vector<Place> primes_above(const SpecPtr& s, const mpz_class& p) {
  if (s->is_function_field())
    fail(errc::wrong_family, "function field places are keyed by polynomials");
  if (s->is_rationals()) return {Place::rational_prime(s, p)};
  if (!is_prime(p)) fail(errc::not_prime, p.get_str() + " is not prime");

  mpz_class t = s->omega_trace();
  mpz_class n = s->omega_norm();
  if (p == 2) {
    if (t == 1) {
      // X^2 + X + n mod 2: splits as X(X+1) iff n is even.
      if (n % 2 == 0)
        return {Place::quad_prime(s, p, QuadSplit::Split, 0),
                Place::quad_prime(s, p, QuadSplit::Split, 1)};
      return {Place::quad_prime(s, p, QuadSplit::Inert, 0)};
    }
    // t = 0 means d = 2, 3 mod 4, and 2 always ramifies: X^2 + n is a square mod 2.
    return {Place::quad_prime(s, p, QuadSplit::Ramified, n % 2 == 0 ? 0 : 1)};
  }

  int k = mpz_kronecker(s->disc().get_mpz_t(), p.get_mpz_t());
  if (k == -1) return {Place::quad_prime(s, p, QuadSplit::Inert, 0)};
  mpz_class inv2 = (p + 1) / 2;
  if (k == 0) {
    mpz_class r = (t * inv2) % p;
    return {Place::quad_prime(s, p, QuadSplit::Ramified, r)};
  }
  mpz_class sq = sqrt_mod(((s->disc() % p) + p) % p, p);
  mpz_class r1 = ((t + sq) * inv2) % p;
  mpz_class r2 = ((t - sq) * inv2 % p + p) % p;
  if (r2 < r1) std::swap(r1, r2);
  return {Place::quad_prime(s, p, QuadSplit::Split, r1),
          Place::quad_prime(s, p, QuadSplit::Split, r2)};
}

Place conjugate_place(const Place& v) {
  if (v.split() != QuadSplit::Split) return v;
  mpz_class other = ((v.spec()->omega_trace() - v.root()) % v.p() + v.p()) % v.p();
  return Place::quad_prime(v.spec(), v.p(), QuadSplit::Split, other);
}

std::vector<Place> arch_places(const SpecPtr& s) {
  if (s->is_rationals()) return {Place::arch_real(s, 0)};
  if (s->is_quadratic()) {
    if (s->d() > 0) return {Place::arch_real(s, 0), Place::arch_real(s, 1)};
    return {Place::arch_complex(s)};
  }
  return {};
}

std::vector<Place> infinite_places(const SpecPtr& s) {
  if (s->is_function_field()) return {Place::ff_infinity(s)};
  return arch_places(s);
}

mpz_class residue_size(const Place& v) {
  if (v.is_archimedean()) fail(errc::archimedean_place, "no residue field at an archimedean place");
  const FieldSpec& s = *v.spec();
  if (s.is_function_field()) {
    mpz_class q(s.fq().q());
    if (v.kind() == PlaceKind::FFInfinity) return q;
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), q.get_mpz_t(), v.poly().degree());
    return out;
  }
  if (v.split() == QuadSplit::Inert) return v.p() * v.p();
  return v.p();
}

}  // namespace adelic
