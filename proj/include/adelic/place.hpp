#pragma once

#include <vector>

#include "adelic/elements.hpp"

namespace adelic {

enum class PlaceKind { Finite, FFInfinity, ArchReal, ArchComplex };
enum class QuadSplit { None, Split, Inert, Ramified };

// A place of the global field: a maximal ideal of R, the 1/t place of
// F_q(t), or an archimedean embedding. Finite places are keyed canonically:
//   Q          : the prime p;
//   Q(sqrt d)  : (p, r) with r the root of X^2 - Tr(omega) X + N(omega) mod p
//                picked by this place (split: two roots, ramified: the double
//                root); inert places carry no root;
//   F_q(t)     : a monic irreducible polynomial.
class Place {
 public:
  static Place rational_prime(const SpecPtr& s, const mpz_class& p);
  static Place quad_prime(const SpecPtr& s, const mpz_class& p, QuadSplit split,
                          const mpz_class& root);
  static Place ff_prime(const SpecPtr& s, const FqPoly& poly);
  static Place ff_infinity(const SpecPtr& s);
  static Place arch_real(const SpecPtr& s, int emb_index);
  static Place arch_complex(const SpecPtr& s);

  const SpecPtr& spec() const { return spec_; }
  PlaceKind kind() const { return kind_; }
  bool is_finite() const { return kind_ == PlaceKind::Finite; }
  bool is_archimedean() const {
    return kind_ == PlaceKind::ArchReal || kind_ == PlaceKind::ArchComplex;
  }

  // Residue characteristic of a finite place over Z.
  const mpz_class& p() const { return p_; }
  QuadSplit split() const { return split_; }
  const mpz_class& root() const { return root_; }
  const FqPoly& poly() const { return poly_; }
  int emb_index() const { return emb_index_; }

  // e and f over the base prime; both 1 outside the quadratic family except
  // that a function-field place of degree n has f = n.
  int ramification_index() const;
  int residue_degree() const;

  bool operator==(const Place& o) const;
  bool operator!=(const Place& o) const { return !(*this == o); }
  // Finite places first in canonical key order, then inf, then archimedean.
  bool operator<(const Place& o) const;

 private:
  explicit Place(SpecPtr s) : spec_(std::move(s)) {}

  SpecPtr spec_;
  PlaceKind kind_ = PlaceKind::Finite;
  mpz_class p_;
  QuadSplit split_ = QuadSplit::None;
  mpz_class root_;
  FqPoly poly_;
  int emb_index_ = 0;
};

// The finite places over a rational prime p (validates primality). One place
// for Q; for Q(sqrt d) the splitting of p is decided by kronecker(D, p) with
// the usual p = 2 case analysis.
std::vector<Place> primes_above(const SpecPtr& s, const mpz_class& p);

// The other place over the same split prime; identity for inert and ramified.
Place conjugate_place(const Place& v);

// All archimedean places (empty for function fields).
std::vector<Place> arch_places(const SpecPtr& s);

// All infinite places: archimedean ones, or the 1/t place for F_q(t).
std::vector<Place> infinite_places(const SpecPtr& s);

// Size of the residue field at a nonarchimedean place.
mpz_class residue_size(const Place& v);

}  // namespace adelic
