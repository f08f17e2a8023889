#pragma once

#include <complex>
#include <cstdint>
#include <variant>

#include <gmpxx.h>

#include "adelic/field.hpp"

namespace adelic {

// a + b*omega in the maximal order Z[omega].
struct QuadInt {
  mpz_class a, b;

  bool operator==(const QuadInt& o) const { return a == o.a && b == o.b; }
  bool operator!=(const QuadInt& o) const { return !(*this == o); }
  bool is_zero() const { return a == 0 && b == 0; }
};

QuadInt quad_mul(const FieldSpec& s, const QuadInt& x, const QuadInt& y);
QuadInt quad_conj(const FieldSpec& s, const QuadInt& x);
// N(a + b*omega) = a^2 + Tr(omega) ab + N(omega) b^2; multiplicative, 0 only at 0.
mpz_class quad_norm(const FieldSpec& s, const QuadInt& x);
mpz_class quad_trace(const FieldSpec& s, const QuadInt& x);

// Element of the ring of integers R: Z, Z[omega], or F_q[t].
class RingElem {
 public:
  static RingElem from_int(const SpecPtr& s, const mpz_class& n);
  static RingElem quad(const SpecPtr& s, const mpz_class& a, const mpz_class& b);
  static RingElem poly(const SpecPtr& s, FqPoly f);
  static RingElem zero(const SpecPtr& s) { return from_int(s, 0); }
  static RingElem one(const SpecPtr& s) { return from_int(s, 1); }

  const SpecPtr& spec() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  const mpz_class& z() const;
  const QuadInt& quad() const;
  const FqPoly& poly() const;

  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator*(const RingElem& o) const;
  RingElem operator-() const;
  bool operator==(const RingElem& o) const;
  bool operator!=(const RingElem& o) const { return !(*this == o); }

  // Galois conjugate; identity outside the quadratic family.
  RingElem conjugate() const;
  // Norm down to Z (the element itself for Q); rejects the function field.
  mpz_class norm_z() const;

 private:
  RingElem(SpecPtr s, std::variant<mpz_class, QuadInt, FqPoly> v)
      : spec_(std::move(s)), v_(std::move(v)) {}

  SpecPtr spec_;
  std::variant<mpz_class, QuadInt, FqPoly> v_;
};

// Element of the fraction field K, kept in a canonical reduced form:
//   Q          : mpq_class in lowest terms;
//   Q(sqrt d)  : (a + b*omega)/den with den > 0 and gcd(a, b, den) = 1;
//   F_q(t)     : num/den with den monic and gcd(num, den) = 1.
class FieldElem {
 public:
  static FieldElem rational(const SpecPtr& s, const mpq_class& q);
  static FieldElem from_int(const SpecPtr& s, const mpz_class& n);
  static FieldElem from_ring(const RingElem& r);
  static FieldElem quad(const SpecPtr& s, const mpz_class& a, const mpz_class& b,
                        const mpz_class& den);
  static FieldElem ff(const SpecPtr& s, FqPoly num, FqPoly den);
  static FieldElem zero(const SpecPtr& s) { return from_int(s, 0); }
  static FieldElem one(const SpecPtr& s) { return from_int(s, 1); }
  // The generator omega of the maximal order (quadratic only).
  static FieldElem omega(const SpecPtr& s);
  // The variable t (function field only).
  static FieldElem t_var(const SpecPtr& s);
  // The F_q extension-field generator as a constant (function field, e >= 2).
  static FieldElem u_gen(const SpecPtr& s);

  const SpecPtr& spec() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rat() const;
  const QuadInt& quad_num() const;
  const mpz_class& quad_den() const;
  const FqPoly& ff_num() const;
  const FqPoly& ff_den() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  FieldElem inv() const;
  FieldElem conjugate() const;
  // Norm down to Q (quadratic and rational families).
  mpq_class norm_q() const;

  bool is_integral() const;
  // Conversion to R; the element must be integral.
  RingElem as_ring() const;

  RingElem numerator() const;
  RingElem denominator() const;

 private:
  struct QuadRat {
    QuadInt num;
    mpz_class den;
  };
  struct FqRat {
    FqPoly num, den;
  };

  FieldElem(SpecPtr s, std::variant<mpq_class, QuadRat, FqRat> v)
      : spec_(std::move(s)), v_(std::move(v)) {}

  static FieldElem make_quad(const SpecPtr& s, QuadInt num, mpz_class den);
  static FieldElem make_ff(const SpecPtr& s, FqPoly num, FqPoly den);

  SpecPtr spec_;
  std::variant<mpq_class, QuadRat, FqRat> v_;
};

// x^e with e any integer (negative powers through inv).
FieldElem felem_pow(const FieldElem& x, std::int64_t e);

// Real embeddings, defined for Q (index 0) and real quadratic fields
// (index 0 sends omega to (Tr(omega) + sqrt D)/2, index 1 to its conjugate).
double eval_real(const FieldElem& x, int emb_index);
// The complex embedding omega -> (Tr(omega) + i sqrt|D|)/2 of an imaginary
// quadratic field.
std::complex<double> eval_complex(const FieldElem& x);

}  // namespace adelic
