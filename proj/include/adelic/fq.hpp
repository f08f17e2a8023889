#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "adelic/errors.hpp"

namespace adelic {

// An element of F_q, q = p^e, encoded as the base-p digit index of its
// polynomial expression in the field generator: sum a_i * x^i  <->  sum a_i * p^i.
// For prime fields (e = 1) the index is just the residue in [0, p).
using Fq = std::uint32_t;

// F_q = F_p[x]/(m) for a fixed monic irreducible m of degree e. The modulus
// comes from a shipped table (least-index monic irreducible per (p, e));
// supported range: p <= 13 prime, e <= 4, and e = 1 for any prime p < 2^16.
class FqField {
 public:
  FqField() = default;
  FqField(long p, int e);

  long p() const { return p_; }
  int ext_degree() const { return e_; }
  std::uint32_t q() const { return q_; }
  // Modulus coefficients c_0..c_e (c_e = 1); only meaningful for e >= 2.
  const std::array<std::uint32_t, 5>& modulus() const { return mod_; }

  Fq zero() const { return 0; }
  Fq one() const { return 1; }
  // The field generator x (only for e >= 2).
  Fq gen() const;
  // Image of a rational integer under Z -> F_q (reduction mod p).
  Fq from_int(const mpz_class& n) const;

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;
  Fq pow(Fq a, std::uint64_t n) const;

  bool operator==(const FqField& o) const { return p_ == o.p_ && e_ == o.e_; }
  bool operator!=(const FqField& o) const { return !(*this == o); }

 private:
  std::array<std::uint32_t, 4> decode(Fq a) const;
  Fq encode(const std::array<std::uint32_t, 4>& c) const;

  long p_ = 0;
  int e_ = 1;
  std::uint32_t q_ = 0;
  std::array<std::uint32_t, 5> mod_{};
};

// Dense univariate polynomial over F_q. coeffs[i] is the coefficient of t^i;
// no stored leading zeros, so the zero polynomial has empty coeffs.
struct FqPoly {
  std::vector<Fq> c;

  bool is_zero() const { return c.empty(); }
  // Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Fq leading() const { return c.empty() ? 0 : c.back(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool operator==(const FqPoly& o) const { return c == o.c; }
  bool operator!=(const FqPoly& o) const { return c != o.c; }
  // Lexicographic on (degree, coefficient indices high-to-low); a total order
  // used for canonical place sorting.
  bool operator<(const FqPoly& o) const;
};

FqPoly poly_zero();
FqPoly poly_one();
FqPoly poly_t();
FqPoly poly_const(Fq a);

FqPoly poly_add(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_sub(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_neg(const FqField& F, const FqPoly& a);
FqPoly poly_mul(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_scale(const FqField& F, Fq s, const FqPoly& a);
// Quotient and remainder; the divisor must be nonzero.
std::pair<FqPoly, FqPoly> poly_divmod(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_mod(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_div_exact(const FqField& F, const FqPoly& a, const FqPoly& b);
// Monic gcd (gcd(0,0) = 0).
FqPoly poly_gcd(const FqField& F, FqPoly a, FqPoly b);
FqPoly poly_monic(const FqField& F, const FqPoly& a);
FqPoly poly_derivative(const FqField& F, const FqPoly& a);
FqPoly poly_pow(const FqField& F, const FqPoly& a, unsigned long n);
// a^n mod m, with an arbitrary-size exponent.
FqPoly poly_powmod(const FqField& F, const FqPoly& a, const mpz_class& n, const FqPoly& m);
Fq poly_eval(const FqField& F, const FqPoly& a, Fq x);

bool poly_is_irreducible(const FqField& F, const FqPoly& a);

// Complete factorization of a nonzero polynomial into monic irreducibles
// (the leading unit is dropped). Distinct-degree splitting followed by
// Cantor-Zassenhaus equal-degree splitting; the internal randomness is
// seeded per call, so results are reproducible and call-order independent.
std::map<FqPoly, int> poly_factor(const FqField& F, const FqPoly& a);

// Monic irreducibles enumerated by (degree, index) order; used by tests and
// the lazy place enumeration.
std::vector<FqPoly> monic_irreducibles_up_to_degree(const FqField& F, int max_deg);

}  // namespace adelic
