#pragma once

#include <memory>
#include <string>

#include <gmpxx.h>

#include "adelic/fq.hpp"

namespace adelic {

enum class Family { Rationals, Quadratic, FunctionField };

// Which global field family is active, together with the data that pins down
// its ring of integers: Z, the maximal order Z[omega] of Q(sqrt d), or F_q[t].
class FieldSpec {
 public:
  static std::shared_ptr<const FieldSpec> rationals();
  // d squarefree, d != 0, 1. omega = (1+sqrt d)/2 when d = 1 mod 4, else sqrt d.
  static std::shared_ptr<const FieldSpec> quadratic(const mpz_class& d);
  static std::shared_ptr<const FieldSpec> function_field(long p, int e);

  Family family() const { return family_; }
  bool is_rationals() const { return family_ == Family::Rationals; }
  bool is_quadratic() const { return family_ == Family::Quadratic; }
  bool is_function_field() const { return family_ == Family::FunctionField; }

  // Quadratic data.
  const mpz_class& d() const { return d_; }
  const mpz_class& disc() const { return disc_; }           // fundamental discriminant D
  int omega_trace() const { return omega_trace_; }          // Tr(omega): 0 or 1
  const mpz_class& omega_norm() const { return omega_norm_; }  // N(omega): -d or (1-d)/4

  // Function-field data.
  const FqField& fq() const { return fq_; }

  // Field degree over its base (Q or F_q(t)).
  int degree() const { return family_ == Family::Quadratic ? 2 : 1; }

  bool operator==(const FieldSpec& o) const;
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  std::string name() const;

 private:
  FieldSpec() = default;

  Family family_ = Family::Rationals;
  mpz_class d_, disc_, omega_norm_;
  int omega_trace_ = 0;
  FqField fq_;
};

using SpecPtr = std::shared_ptr<const FieldSpec>;

inline void require_same_spec(const FieldSpec& a, const FieldSpec& b) {
  if (a != b) fail(errc::spec_mismatch, "values belong to different field specs");
}

}  // namespace adelic
