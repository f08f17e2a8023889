#pragma once

#include <cstdint>
#include <string>

#include "adelic/ideal.hpp"

namespace adelic {

// Value in Z together with the absorbing top element attained only at 0.
class Val {
 public:
  static Val infinity() {
    Val v;
    v.inf_ = true;
    return v;
  }
  static Val of(std::int64_t n) {
    Val v;
    v.n_ = n;
    return v;
  }

  bool is_infinity() const { return inf_; }
  std::int64_t n() const {
    if (inf_) fail(errc::invalid_argument, "no integer value at infinity");
    return n_;
  }

  Val operator+(const Val& o) const {
    if (inf_ || o.inf_) return infinity();
    return of(n_ + o.n_);
  }
  Val operator-(const Val& o) const {
    if (o.inf_) fail(errc::invalid_argument, "cannot subtract infinity");
    if (inf_) return infinity();
    return of(n_ - o.n_);
  }

  bool operator==(const Val& o) const { return inf_ == o.inf_ && (inf_ || n_ == o.n_); }
  bool operator!=(const Val& o) const { return !(*this == o); }
  bool operator<(const Val& o) const {
    if (inf_) return false;
    return o.inf_ || n_ < o.n_;
  }
  bool operator<=(const Val& o) const { return *this < o || *this == o; }
  bool operator>=(const Val& o) const { return !(*this < o); }
  bool operator>(const Val& o) const { return o < *this; }

  static Val min(const Val& a, const Val& b) { return a < b ? a : b; }

  std::string str() const { return inf_ ? "inf" : std::to_string(n_); }

 private:
  Val() = default;
  std::int64_t n_ = 0;
  bool inf_ = false;
};

// Exponent of m_v in (x); Val::infinity() exactly at x = 0. At the 1/t place
// this is -deg x.
Val int_valuation(const Place& v, const RingElem& x);

// Extension to K by val(num) - val(den); rejects archimedean places.
Val valuation(const Place& v, const FieldElem& x);

// An element of valuation exactly 1 at v: the construction is verified by a
// valuation check before returning. Integral at finite places; 1/t at the
// place at infinity of F_q(t).
FieldElem uniformizer(const Place& v);

// The finite places where val(x) != 0, with the valuations. Excludes the 1/t
// place of function fields; x must be nonzero.
std::map<Place, std::int64_t> finite_support(const FieldElem& x);

}  // namespace adelic
