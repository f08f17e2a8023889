#include "adelic/format.hpp"

#include <charconv>
#include <vector>

namespace adelic {

namespace {

// One additive term c*sym^k without spaces; c = 1 drops to sym^k.
std::string power_term(const std::string& coeff, const std::string& sym, int k) {
  std::string var = k == 1 ? sym : sym + "^" + std::to_string(k);
  if (k == 0) return coeff;
  if (coeff == "1") return var;
  return coeff + var;
}

bool is_atom(const std::string& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/' || c == '+') return false;
    if (c == '-' && i > 0) return false;
  }
  return true;
}

std::string parenthesize_unless_atom(const std::string& s) {
  return is_atom(s) ? s : "(" + s + ")";
}

// a + b*w over the integers, no denominator.
std::string quad_int_str(const mpz_class& a, const mpz_class& b) {
  if (b == 0) return a.get_str();
  std::string wterm;
  mpz_class babs = abs(b);
  if (babs == 1)
    wterm = "w";
  else
    wterm = babs.get_str() + "w";
  if (a == 0) return (b < 0 ? "-" : "") + wterm;
  return a.get_str() + (b < 0 ? "-" : "+") + wterm;
}

}  // namespace

std::string format_fq(const FqField& F, Fq a) {
  if (F.ext_degree() == 1 || a < static_cast<Fq>(F.p())) return std::to_string(a);
  // Base-p digits of the index are the coordinates in powers of u.
  std::vector<Fq> digits;
  Fq rest = a;
  while (rest) {
    digits.push_back(rest % static_cast<Fq>(F.p()));
    rest /= static_cast<Fq>(F.p());
  }
  std::string out;
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    if (digits[i] == 0) continue;
    std::string term = power_term(std::to_string(digits[i]), "u", i);
    out += out.empty() ? term : "+" + term;
  }
  return out.empty() ? "0" : out;
}

std::string format_poly(const FqField& F, const FqPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    if (f.c[i] == 0) continue;
    std::string coeff = format_fq(F, f.c[i]);
    if (!is_atom(coeff)) coeff = "(" + coeff + ")";
    std::string term = power_term(coeff, "t", i);
    out += out.empty() ? term : "+" + term;
  }
  return out;
}

std::string format_ring_elem(const RingElem& x) {
  switch (x.spec()->family()) {
    case Family::Rationals:
      return x.z().get_str();
    case Family::Quadratic:
      return quad_int_str(x.quad().a, x.quad().b);
    case Family::FunctionField:
      return format_poly(x.spec()->fq(), x.poly());
  }
  return "?";
}

std::string format_field_elem(const FieldElem& x) {
  switch (x.spec()->family()) {
    case Family::Rationals:
      return x.rat().get_str();
    case Family::Quadratic: {
      std::string num = quad_int_str(x.quad_num().a, x.quad_num().b);
      if (x.quad_den() == 1) return num;
      return parenthesize_unless_atom(num) + "/" + x.quad_den().get_str();
    }
    case Family::FunctionField: {
      const FqField& F = x.spec()->fq();
      std::string num = format_poly(F, x.ff_num());
      if (x.ff_den() == poly_one()) return num;
      return parenthesize_unless_atom(num) + "/" +
             parenthesize_unless_atom(format_poly(F, x.ff_den()));
    }
  }
  return "?";
}

std::string format_place(const Place& v) {
  switch (v.kind()) {
    case PlaceKind::FFInfinity:
      return "inf";
    case PlaceKind::ArchReal:
      return v.emb_index() == 0 ? "inf_real_0" : "inf_real_1";
    case PlaceKind::ArchComplex:
      return "inf_complex";
    case PlaceKind::Finite:
      break;
  }
  const FieldSpec& s = *v.spec();
  if (s.is_rationals()) return v.p().get_str();
  if (s.is_function_field()) return format_poly(s.fq(), v.poly());
  if (v.split() == QuadSplit::Inert) return "[" + v.p().get_str() + "]";
  IntegralIdeal P = place_ideal(v);
  return "[" + v.p().get_str() + ", " + quad_int_str(P.hnf_b(), P.hnf_c()) + "]";
}

std::string format_ideal(const IntegralIdeal& I) {
  const FieldSpec& s = *I.spec();
  if (s.is_rationals()) return "(" + I.gen_z().get_str() + ")";
  if (s.is_function_field()) return "(" + format_poly(s.fq(), I.gen_poly()) + ")";
  if (I.hnf_b() == 0 && I.hnf_c() == I.hnf_a()) return "(" + I.hnf_a().get_str() + ")";
  return "(" + I.hnf_a().get_str() + ", " + quad_int_str(I.hnf_b(), I.hnf_c()) + ")";
}

std::string format_val(const Val& v) { return v.str(); }

namespace {

std::vector<FieldElem> residue_lifts(const Place& v) {
  const SpecPtr& s = v.spec();
  if (residue_size(v) > 4096)
    fail(errc::invalid_argument, "digit rendering is limited to small residue fields");
  std::vector<FieldElem> out;
  switch (s->family()) {
    case Family::Rationals:
    case Family::Quadratic: {
      long p = v.p().get_si();
      if (s->is_quadratic() && v.split() == QuadSplit::Inert) {
        for (long a = 0; a < p; ++a)
          for (long b = 0; b < p; ++b) out.push_back(FieldElem::quad(s, a, b, 1));
      } else {
        for (long a = 0; a < p; ++a) out.push_back(FieldElem::from_int(s, a));
      }
      return out;
    }
    case Family::FunctionField: {
      const FqField& F = s->fq();
      int deg = v.kind() == PlaceKind::FFInfinity ? 1 : v.poly().degree();
      // All polynomials of degree < deg, indexed base q.
      mpz_class count;
      mpz_ui_pow_ui(count.get_mpz_t(), F.q(), static_cast<unsigned long>(deg));
      for (mpz_class idx = 0; idx < count; ++idx) {
        FqPoly f;
        mpz_class rest = idx;
        for (int i = 0; i < deg; ++i) {
          mpz_class digit = rest % F.q();
          f.c.push_back(static_cast<Fq>(digit.get_ui()));
          rest /= F.q();
        }
        f.trim();
        out.push_back(FieldElem::ff(s, f, poly_one()));
      }
      return out;
    }
  }
  fail(errc::wrong_family, "bad family");
}

struct DigitTerm {
  FieldElem digit;
  std::int64_t exp;
};

// Shared digit-extraction loop; digits are found by scanning the residue
// lift set for the unique z with v(x pi^-i - z) >= 1.
std::string render_expansion(const LocalElement& x, int max_digits, bool laurent) {
  const Place& v = x.place();
  if (laurent && v.kind() != PlaceKind::FFInfinity)
    fail(errc::invalid_argument, "Laurent rendering is for the 1/t place");
  FieldElem pi = uniformizer(v);

  std::string base_sym;
  if (laurent)
    base_sym = "t";
  else
    base_sym = parenthesize_unless_atom(format_field_elem(pi));
  auto base_pow = [&](std::int64_t k) {
    // In the Laurent display the exponent is negated: pi = t^-1.
    std::int64_t shown = laurent ? -k : k;
    if (shown == 1) return base_sym;
    return base_sym + "^" + std::to_string(shown);
  };

  if (x.value().is_zero()) {
    if (x.is_exact()) return "0";
    return "O(" + base_pow(x.prec()) + ")";
  }

  auto lifts = residue_lifts(v);
  std::int64_t start = valuation(v, x.value()).n();
  std::int64_t horizon = x.is_exact() ? start + max_digits : x.prec();

  std::vector<DigitTerm> terms;
  FieldElem cur = x.value();
  std::int64_t i = start;
  for (; i < horizon && !cur.is_zero(); ++i) {
    FieldElem shifted = cur * felem_pow(pi, -i);
    const FieldElem* digit = nullptr;
    for (const FieldElem& z : lifts) {
      if (valuation(v, shifted - z) >= Val::of(1)) {
        digit = &z;
        break;
      }
    }
    if (!digit) fail(errc::invalid_argument, "no digit in the residue system");
    if (!digit->is_zero()) terms.push_back({*digit, i});
    cur = cur - *digit * felem_pow(pi, i);
  }

  std::string out;
  for (const DigitTerm& term : terms) {
    std::string d = parenthesize_unless_atom(format_field_elem(term.digit));
    std::string piece;
    if (term.exp == 0)
      piece = d;
    else if (d == "1")
      piece = base_pow(term.exp);
    else
      piece = d + "*" + base_pow(term.exp);
    out += out.empty() ? piece : " + " + piece;
  }
  if (!x.is_exact()) {
    std::string tail = "O(" + base_pow(x.prec()) + ")";
    out += out.empty() ? tail : " + " + tail;
  } else if (!cur.is_zero()) {
    out += " + ...";
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string render_padic(const LocalElement& x, int max_digits) {
  return render_expansion(x, max_digits, false);
}

std::string render_laurent(const LocalElement& x, int max_digits) {
  return render_expansion(x, max_digits, true);
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

std::string format_component(const LocalElement& x) {
  std::string out = format_field_elem(x.value());
  if (!x.is_exact()) out += " prec " + std::to_string(x.prec());
  return out;
}

namespace {

// Everything up to the closing brace; full adeles splice in the inf part.
std::string adele_body(const FiniteAdele& x) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, c] : x.exceptional()) {
    if (!first) out += ", ";
    out += format_place(v) + ": " + format_component(c);
    first = false;
  }
  out += first ? "tail " : "; tail ";
  out += format_field_elem(x.tail());
  return out;
}

}  // namespace

std::string format_finite_adele(const FiniteAdele& x) { return adele_body(x) + "}"; }

std::string format_infinite_part(const SpecPtr& s, const InfinitePart& inf) {
  (void)s;
  if (const auto* coords = std::get_if<std::vector<double>>(&inf)) {
    std::string out;
    for (double c : *coords) {
      if (!out.empty()) out += ", ";
      out += format_double(c);
    }
    return out;
  }
  if (const auto* z = std::get_if<std::complex<double>>(&inf)) {
    std::string im = format_double(std::abs(z->imag()));
    return format_double(z->real()) + (z->imag() < 0 ? "-" : "+") + im + "i";
  }
  return format_component(std::get<LocalElement>(inf));
}

std::string format_adele(const Adele& x) {
  return adele_body(x.finite()) + "; inf " + format_infinite_part(x.spec(), x.infinite()) + "}";
}

std::string format_finite_idele(const FiniteIdele& x) {
  return format_finite_adele(x.value());
}

std::string format_idele(const Idele& x) {
  return adele_body(x.finite().value()) + "; inf " +
         format_infinite_part(x.spec(), x.infinite()) + "}";
}

namespace {

// A place raised to a power, re-parseable through the ideal grammar; finite
// function-field places with more than one term need parentheses.
std::string place_power(const Place& v, std::int64_t e) {
  std::string base = format_place(v);
  // Bracketed places already group; bare polynomials need parentheses so a
  // product of them re-parses factor by factor.
  if (base[0] != '[' && base.find_first_of("+^") != std::string::npos)
    base = "(" + base + ")";
  if (e == 1 && v.kind() == PlaceKind::Finite) return base;
  return base + "^" + std::to_string(e);
}

}  // namespace

std::string format_valuation_vector(const ValuationVector& m) {
  if (m.exponents().empty()) return "1";
  std::string out;
  for (const auto& [v, e] : m.exponents()) {
    if (!out.empty()) out += " * ";
    out += place_power(v, e);
  }
  return out;
}

std::string format_fractional_ideal(const FractionalIdeal& I) {
  const SpecPtr& s = I.spec();
  if (!s->is_quadratic()) {
    FieldElem gen = FieldElem::from_ring(RingElem::one(s));
    if (s->is_rationals())
      gen = FieldElem::rational(s, mpq_class(I.ideal_part().gen_z()) / mpq_class(I.denom().z()));
    else
      gen = FieldElem::ff(s, I.ideal_part().gen_poly(), I.denom().poly());
    return "(" + format_field_elem(gen) + ")";
  }
  std::string out = format_ideal(I.ideal_part());
  if (!I.denom().is_one())
    out += "/" + parenthesize_unless_atom(format_ring_elem(I.denom()));
  return out;
}

std::string format_quad_form(const QuadForm& f) {
  return "(" + f.a.get_str() + ", " + f.b.get_str() + ", " + f.c.get_str() + ")";
}

json json_component(const Place& v, const LocalElement& x) {
  json j{{"place", format_place(v)}, {"value", format_field_elem(x.value())}};
  if (!x.is_exact()) j["prec"] = x.prec();
  return j;
}

json json_finite_adele(const FiniteAdele& x) {
  json entries = json::array();
  for (const auto& [v, c] : x.exceptional()) entries.push_back(json_component(v, c));
  return json{{"exceptional", entries}, {"tail", format_field_elem(x.tail())}};
}

json json_adele(const Adele& x) {
  json j = json_finite_adele(x.finite());
  const InfinitePart& inf = x.infinite();
  if (const auto* coords = std::get_if<std::vector<double>>(&inf)) {
    json arr = json::array();
    for (double c : *coords) arr.push_back(format_double(c));
    j["inf"] = arr;
  } else if (const auto* z = std::get_if<std::complex<double>>(&inf)) {
    j["inf"] = json{{"re", format_double(z->real())}, {"im", format_double(z->imag())}};
  } else {
    const auto& c = std::get<LocalElement>(inf);
    json e{{"value", format_field_elem(c.value())}};
    if (!c.is_exact()) e["prec"] = c.prec();
    j["inf"] = e;
  }
  return j;
}

json json_valuation_vector(const ValuationVector& m) {
  json out = json::array();
  for (const auto& [v, e] : m.exponents())
    out.push_back(json{{"place", format_place(v)}, {"exp", e}});
  return out;
}

json json_fractional_ideal(const FractionalIdeal& I) {
  return json{{"denom", format_ring_elem(I.denom())},
              {"ideal", format_ideal(I.ideal_part())},
              {"exponents", json_valuation_vector(frac_factorization(I))}};
}

json json_class_group(const ClassGroup& g) {
  json forms = json::array();
  for (const QuadForm& f : g.forms())
    forms.push_back(json::array({f.a.get_si(), f.b.get_si(), f.c.get_si()}));
  return json{{"discriminant", g.spec()->disc().get_si()},
              {"order", g.order()},
              {"forms", forms},
              {"table", g.table()}};
}

}  // namespace adelic
