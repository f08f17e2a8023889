#include "adelic/field.hpp"

#include "adelic/intfactor.hpp"

namespace adelic {

std::shared_ptr<const FieldSpec> FieldSpec::rationals() {
  auto s = std::shared_ptr<FieldSpec>(new FieldSpec());
  s->family_ = Family::Rationals;
  return s;
}

std::shared_ptr<const FieldSpec> FieldSpec::quadratic(const mpz_class& d) {
  if (d == 0 || d == 1) fail(errc::invalid_argument, "quadratic d must not be 0 or 1");
  if (!is_squarefree(d)) fail(errc::invalid_argument, "quadratic d must be squarefree");
  auto s = std::shared_ptr<FieldSpec>(new FieldSpec());
  s->family_ = Family::Quadratic;
  s->d_ = d;
  mpz_class dm4 = ((d % 4) + 4) % 4;
  if (dm4 == 1) {
    s->disc_ = d;
    s->omega_trace_ = 1;
    s->omega_norm_ = (1 - d) / 4;
  } else {
    s->disc_ = 4 * d;
    s->omega_trace_ = 0;
    s->omega_norm_ = -d;
  }
  return s;
}

std::shared_ptr<const FieldSpec> FieldSpec::function_field(long p, int e) {
  auto s = std::shared_ptr<FieldSpec>(new FieldSpec());
  s->family_ = Family::FunctionField;
  s->fq_ = FqField(p, e);
  return s;
}

bool FieldSpec::operator==(const FieldSpec& o) const {
  if (family_ != o.family_) return false;
  switch (family_) {
    case Family::Rationals:
      return true;
    case Family::Quadratic:
      return d_ == o.d_;
    case Family::FunctionField:
      return fq_ == o.fq_;
  }
  return false;
}

std::string FieldSpec::name() const {
  switch (family_) {
    case Family::Rationals:
      return "Q";
    case Family::Quadratic:
      return "Q(sqrt " + d_.get_str() + ")";
    case Family::FunctionField:
      return "Fq(t;q=" + std::to_string(fq_.q()) + ")";
  }
  return "?";
}

}  // namespace adelic
