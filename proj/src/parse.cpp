#include "adelic/parse.hpp"

#include <cctype>
#include <charconv>
#include <regex>
#include <vector>

#include "adelic/format.hpp"
#include "adelic/valuation.hpp"

namespace adelic {

namespace {

[[noreturn]] void bad(const std::string& what) { throw parse_error(what); }

struct Token {
  enum Kind { Int, Float, Ident, Punct, End } kind;
  std::string text;
  char punct = 0;
};

std::vector<Token> lex(const std::string& in) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < in.size()) {
    char c = in[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i]))) ++i;
      bool flt = false;
      if (i < in.size() && in[i] == '.') {
        flt = true;
        ++i;
        while (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i]))) ++i;
      }
      if (i < in.size() && (in[i] == 'e' || in[i] == 'E')) {
        std::size_t mark = i++;
        if (i < in.size() && (in[i] == '+' || in[i] == '-')) ++i;
        if (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i]))) {
          flt = true;
          while (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i]))) ++i;
        } else {
          i = mark;  // the e belongs to an identifier, not this number
        }
      }
      out.push_back({flt ? Token::Float : Token::Int, in.substr(start, i - start), 0});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < in.size() &&
             (std::isalnum(static_cast<unsigned char>(in[i])) || in[i] == '_'))
        ++i;
      out.push_back({Token::Ident, in.substr(start, i - start), 0});
      continue;
    }
    if (std::string("(){}[],;:+-*/^").find(c) != std::string::npos) {
      out.push_back({Token::Punct, std::string(1, c), c});
      ++i;
      continue;
    }
    bad(std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::End, "", 0});
  return out;
}

class Parser {
 public:
  Parser(SpecPtr s, const std::string& text) : spec_(std::move(s)), toks_(lex(text)) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool at_punct(char c) const { return peek().kind == Token::Punct && peek().punct == c; }
  bool at_ident(const char* name) const {
    return peek().kind == Token::Ident && peek().text == name;
  }
  void expect_punct(char c) {
    if (!at_punct(c)) bad(std::string("expected '") + c + "' near '" + peek().text + "'");
    ++pos_;
  }
  void expect_end() {
    if (peek().kind != Token::End) bad("trailing input at '" + peek().text + "'");
  }

  mpz_class expect_int() {
    if (peek().kind != Token::Int) bad("expected an integer near '" + peek().text + "'");
    return mpz_class(next().text);
  }

  std::int64_t expect_exponent() {
    bool neg = at_punct('-');
    if (neg) ++pos_;
    mpz_class e = expect_int();
    if (!e.fits_slong_p()) bad("exponent out of range");
    return neg ? -e.get_si() : e.get_si();
  }

  double expect_double() {
    bool neg = at_punct('-');
    if (neg) ++pos_;
    if (peek().kind != Token::Int && peek().kind != Token::Float)
      bad("expected a number near '" + peek().text + "'");
    const std::string& text = next().text;
    double out = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), out);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
      bad("bad number '" + text + "'");
    return neg ? -out : out;
  }

  // expr := term (('+'|'-') term)*
  FieldElem parse_expr() {
    FieldElem x = parse_term();
    for (;;) {
      if (at_punct('+')) {
        ++pos_;
        x = x + parse_term();
      } else if (at_punct('-')) {
        ++pos_;
        x = x - parse_term();
      } else {
        return x;
      }
    }
  }

  // term := unary (('*'|'/') unary | symbol-led power)*; juxtaposition only
  // before w, t, u, or an open paren, so `7 prec 4` keeps prec out of reach.
  FieldElem parse_term() {
    FieldElem x = parse_unary();
    for (;;) {
      if (at_punct('*')) {
        ++pos_;
        x = x * parse_unary();
      } else if (at_punct('/')) {
        ++pos_;
        x = x / parse_unary();
      } else if (at_punct('(') || at_ident("w") || at_ident("t") || at_ident("u")) {
        x = x * parse_power();
      } else {
        return x;
      }
    }
  }

  FieldElem parse_unary() {
    if (at_punct('-')) {
      ++pos_;
      return -parse_unary();
    }
    return parse_power();
  }

  FieldElem parse_power() {
    FieldElem x = parse_atom();
    if (at_punct('^')) {
      ++pos_;
      return felem_pow(x, expect_exponent());
    }
    return x;
  }

  FieldElem parse_atom() {
    if (peek().kind == Token::Int) return FieldElem::from_int(spec_, mpz_class(next().text));
    if (at_ident("w")) {
      ++pos_;
      return FieldElem::omega(spec_);
    }
    if (at_ident("t")) {
      ++pos_;
      return FieldElem::t_var(spec_);
    }
    if (at_ident("u")) {
      ++pos_;
      if (!spec_->is_function_field() || spec_->fq().ext_degree() == 1)
        fail(errc::wrong_family, "u is the extension generator of a non-prime F_q");
      FqPoly c;
      c.c.push_back(static_cast<Fq>(spec_->fq().p()));
      return FieldElem::ff(spec_, c, poly_one());
    }
    if (at_punct('(')) {
      ++pos_;
      FieldElem x = parse_expr();
      expect_punct(')');
      return x;
    }
    bad("expected a value near '" + (peek().kind == Token::End ? "end" : peek().text) + "'");
  }

  Place parse_place_tokens() {
    if (peek().kind == Token::Ident && peek().text.rfind("inf", 0) == 0)
      return parse_infinite_place();
    if (spec_->is_rationals()) return primes_above(spec_, expect_int()).at(0);
    if (spec_->is_function_field()) {
      FieldElem f = parse_expr();
      if (f.ff_den() != poly_one() || f.is_zero())
        bad("a place is a monic irreducible polynomial");
      return Place::ff_prime(spec_, f.ff_num());
    }
    expect_punct('[');
    mpz_class p = expect_int();
    std::optional<QuadInt> gen;
    if (at_punct(',')) {
      ++pos_;
      FieldElem g = parse_expr();
      if (g.quad_den() != 1) bad("place generator must be integral");
      gen = g.quad_num();
    }
    expect_punct(']');
    auto places = primes_above(spec_, p);
    if (!gen.has_value()) {
      if (places.size() != 1)
        fail(errc::invalid_argument, "split prime " + p.get_str() + " needs a generator");
      return places[0];
    }
    for (const Place& v : places) {
      IntegralIdeal P = place_ideal(v);
      if (P.hnf_b() == gen->a && P.hnf_c() == gen->b) return v;
    }
    fail(errc::invalid_argument, "no place over " + p.get_str() + " with that generator");
  }

  // Entry maps and tail/inf clauses of an adele literal.
  ParsedAdele parse_adele_literal() {
    expect_punct('{');
    std::map<Place, LocalElement> comps;
    if (!at_ident("tail")) {
      for (;;) {
        Place v = parse_place_tokens();
        if (!v.is_finite()) bad("adele entries live at finite places");
        expect_punct(':');
        LocalElement c = parse_component(v);
        if (!comps.insert({v, c}).second) bad("duplicate place " + format_place(v));
        if (at_punct(',')) {
          ++pos_;
          continue;
        }
        expect_punct(';');
        break;
      }
    }
    if (!at_ident("tail")) bad("adele literal needs a tail clause");
    ++pos_;
    FieldElem tail = parse_expr();
    std::optional<InfinitePart> inf;
    if (at_punct(';')) {
      ++pos_;
      if (!at_ident("inf")) bad("expected inf clause");
      ++pos_;
      inf = parse_infinite_part();
    }
    expect_punct('}');
    return ParsedAdele{FiniteAdele::make(std::move(comps), tail), std::move(inf)};
  }

  FractionalIdeal parse_ideal_product() {
    FractionalIdeal out = parse_ideal_factor();
    for (;;) {
      if (at_punct('*')) {
        ++pos_;
        out = frac_mul(out, parse_ideal_factor());
      } else if (at_punct('/')) {
        ++pos_;
        out = frac_mul(out, frac_inv(parse_ideal_factor()));
      } else {
        return out;
      }
    }
  }

 private:
  Place parse_infinite_place() {
    std::string name = next().text;
    if (name == "inf") {
      if (spec_->is_function_field()) return Place::ff_infinity(spec_);
      if (spec_->is_rationals()) return Place::arch_real(spec_, 0);
      if (spec_->disc() < 0) return Place::arch_complex(spec_);
      bad("a real quadratic field has two infinite places, name one");
    }
    if (name == "inf_real_0") return Place::arch_real(spec_, 0);
    if (name == "inf_real_1") return Place::arch_real(spec_, 1);
    if (name == "inf_complex") return Place::arch_complex(spec_);
    bad("unknown place '" + name + "'");
  }

  LocalElement parse_component(const Place& v) {
    FieldElem value = parse_expr();
    if (at_ident("prec")) {
      ++pos_;
      mpz_class k = expect_int();
      if (!k.fits_slong_p()) bad("precision out of range");
      return LocalElement::coset(v, value, k.get_si());
    }
    return LocalElement::from_global(v, value);
  }

  InfinitePart parse_infinite_part() {
    switch (spec_->family()) {
      case Family::Rationals:
        return std::vector<double>{expect_double()};
      case Family::Quadratic: {
        if (spec_->disc() > 0) {
          double a = expect_double();
          expect_punct(',');
          return std::vector<double>{a, expect_double()};
        }
        double re = expect_double();
        if (at_ident("i")) {
          ++pos_;
          return std::complex<double>(0, re);
        }
        if (at_punct('+') || at_punct('-')) {
          bool neg = next().punct == '-';
          double im = expect_double();
          if (!at_ident("i")) bad("expected i after the imaginary part");
          ++pos_;
          return std::complex<double>(re, neg ? -im : im);
        }
        return std::complex<double>(re, 0);
      }
      case Family::FunctionField:
        return parse_component(Place::ff_infinity(spec_));
    }
    bad("bad family");
  }

  FractionalIdeal frac_pow(const FractionalIdeal& I, std::int64_t e) {
    std::map<Place, std::int64_t> exps;
    for (const auto& [v, ex] : I.exponents()) exps[v] = ex * e;
    return FractionalIdeal::from_exponents(spec_, exps);
  }

  FractionalIdeal parse_ideal_factor() {
    FractionalIdeal base = FractionalIdeal::unit(spec_);
    if (at_punct('[')) {
      base = FractionalIdeal::from_integral(place_ideal(parse_place_tokens()));
    } else if (at_punct('(')) {
      ++pos_;
      FieldElem first = parse_expr();
      if (at_punct(',')) {
        // Normalized lattice (a, b+cw) over the quadratic order.
        ++pos_;
        FieldElem second = parse_expr();
        expect_punct(')');
        if (!spec_->is_quadratic()) bad("two-generator ideals are quadratic-only");
        if (first.quad_den() != 1 || first.quad_num().b != 0 || second.quad_den() != 1)
          bad("lattice generators must be integral");
        mpz_class a = abs(first.quad_num().a);
        mpz_class b = second.quad_num().a;
        mpz_class c = second.quad_num().b;
        if (a == 0) fail(errc::zero_ideal, "zero lattice");
        if (c < 0) {
          b = -b;
          c = -c;
        }
        mpz_class bm = ((b % a) + a) % a;
        base = FractionalIdeal::from_integral(IntegralIdeal::from_hnf(spec_, a, bm, c));
      } else {
        expect_punct(')');
        base = FractionalIdeal::principal(first);
      }
    } else {
      base = FractionalIdeal::principal(parse_expr());
    }
    if (at_punct('^')) {
      ++pos_;
      return frac_pow(base, expect_exponent());
    }
    return base;
  }

  SpecPtr spec_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// q = p^e for prime p, or nothing.
std::optional<std::pair<long, int>> prime_power(long q) {
  if (q < 2) return std::nullopt;
  for (long p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    int e = 0;
    long rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, e);
  }
  return std::make_pair(q, 1);  // q itself is prime
}

}  // namespace

SpecPtr parse_field(const std::string& text) {
  static const std::regex q_re(R"(^\s*Q\s*$)");
  static const std::regex quad_re(R"(^\s*Q\s*\(\s*sqrt\s*(-?\d+)\s*\)\s*$)");
  static const std::regex ff_re(R"(^\s*Fq\s*\(\s*t\s*;\s*q\s*=\s*(\d+)\s*\)\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, q_re)) return FieldSpec::rationals();
  if (std::regex_match(text, m, quad_re)) return FieldSpec::quadratic(mpz_class(m[1].str()));
  if (std::regex_match(text, m, ff_re)) {
    long q = std::stol(m[1].str());
    auto pe = prime_power(q);
    if (!pe.has_value()) bad("field size must be a prime power");
    return FieldSpec::function_field(pe->first, pe->second);
  }
  bad("unrecognized field '" + text + "' (try Q, \"Q(sqrt -5)\", or \"Fq(t;q=3)\")");
}

FieldElem parse_element(const SpecPtr& s, const std::string& text) {
  Parser p(s, text);
  FieldElem x = p.parse_expr();
  p.expect_end();
  return x;
}

Place parse_place(const SpecPtr& s, const std::string& text) {
  Parser p(s, text);
  Place v = p.parse_place_tokens();
  p.expect_end();
  return v;
}

ParsedAdele parse_adele(const SpecPtr& s, const std::string& text) {
  Parser p(s, text);
  ParsedAdele a = p.parse_adele_literal();
  p.expect_end();
  return a;
}

FractionalIdeal parse_fractional_ideal(const SpecPtr& s, const std::string& text) {
  Parser p(s, text);
  FractionalIdeal I = p.parse_ideal_product();
  p.expect_end();
  return I;
}

}  // namespace adelic
