#include <CLI11.hpp>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "adelic/format.hpp"
#include "adelic/parse.hpp"
#include "adelic/valuation.hpp"

using namespace adelic;

namespace {

constexpr const char* kSchema = "adelic/1";

struct Common {
  std::string field = "Q";
  bool json = false;
  std::string prec = "Exact";
  std::uint64_t seed = 0;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--field", c.field, "field: Q, \"Q(sqrt d)\", or \"Fq(t;q=N)\"")
      ->capture_default_str();
  sub->add_flag("--json", c.json, "emit one JSON document on stdout");
  sub->add_option("--prec", c.prec,
                  "precision applied to literal components without their own "
                  "prec: Exact or a positive integer")
      ->capture_default_str();
  sub->add_option("--seed", c.seed, "seed for randomized self-checks")->capture_default_str();
}

void emit(const Common& c, const json& doc, const std::string& text) {
  if (c.json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

// Truncates exact exceptional components to the default precision; explicit
// per-component precision always wins.
FiniteAdele with_default_prec(const FiniteAdele& a, const std::string& prec) {
  if (prec == "Exact") return a;
  long n = 0;
  try {
    std::size_t used = 0;
    n = std::stol(prec, &used);
    if (used != prec.size()) throw std::invalid_argument(prec);
  } catch (const std::exception&) {
    throw parse_error("--prec wants Exact or a positive integer, got '" + prec + "'");
  }
  if (n < 1) throw parse_error("--prec must be at least 1");
  std::map<Place, LocalElement> comps;
  for (const auto& [v, comp] : a.exceptional())
    comps.insert({v, comp.is_exact() ? LocalElement::coset(v, comp.value(), n) : comp});
  return FiniteAdele::make(std::move(comps), a.tail());
}

json envelope(const std::string& command) {
  return json{{"schema", kSchema}, {"command", command}};
}

int run_val(const Common& c, const std::string& place_text, const std::string& elem_text) {
  SpecPtr s = parse_field(c.field);
  Place v = parse_place(s, place_text);
  FieldElem x = parse_element(s, elem_text);
  Val out = valuation(v, x);
  json doc = envelope("val");
  doc["place"] = format_place(v);
  doc["valuation"] = out.is_infinity() ? json("inf") : json(out.n());
  emit(c, doc, format_val(out));
  return 0;
}

int run_uniformizer(const Common& c, const std::string& place_text) {
  SpecPtr s = parse_field(c.field);
  Place v = parse_place(s, place_text);
  FieldElem pi = uniformizer(v);
  json doc = envelope("uniformizer");
  doc["place"] = format_place(v);
  doc["uniformizer"] = format_field_elem(pi);
  emit(c, doc, format_field_elem(pi));
  return 0;
}

int run_factor_ideal(const Common& c, const std::string& ideal_text) {
  SpecPtr s = parse_field(c.field);
  FractionalIdeal I = parse_fractional_ideal(s, ideal_text);
  ValuationVector f = frac_factorization(I);
  json doc = envelope("factor-ideal");
  doc["ideal"] = format_fractional_ideal(I);
  doc["factors"] = json_valuation_vector(f);
  emit(c, doc, format_valuation_vector(f));
  return 0;
}

int run_adele_op(const Common& c, const std::string& op,
                 const std::vector<std::string>& operands) {
  SpecPtr s = parse_field(c.field);
  std::size_t want = op == "neg" ? 1 : 2;
  if (operands.size() != want)
    throw parse_error(op + " takes " + std::to_string(want) + " adele literal(s)");
  std::vector<ParsedAdele> in;
  for (const std::string& text : operands) {
    ParsedAdele a = parse_adele(s, text);
    a.finite = with_default_prec(a.finite, c.prec);
    in.push_back(std::move(a));
  }
  bool full = in[0].infinite.has_value();
  for (const ParsedAdele& a : in)
    if (a.infinite.has_value() != full)
      throw parse_error("operands must all have an inf clause, or none");

  json doc = envelope("adele-op");
  doc["op"] = op;
  if (op == "eq") {
    bool equal = full ? full_eq(Adele::make(in[0].finite, *in[0].infinite),
                                Adele::make(in[1].finite, *in[1].infinite))
                      : adele_eq(in[0].finite, in[1].finite);
    doc["equal"] = equal;
    emit(c, doc, equal ? "true" : "false");
    return 0;
  }
  if (op != "add" && op != "mul" && op != "neg")
    throw parse_error("op must be one of add, mul, neg, eq");
  if (full) {
    Adele x = Adele::make(in[0].finite, *in[0].infinite);
    Adele out = op == "neg"   ? full_neg(x)
                : op == "add" ? full_add(x, Adele::make(in[1].finite, *in[1].infinite))
                              : full_mul(x, Adele::make(in[1].finite, *in[1].infinite));
    doc["result"] = json_adele(out);
    emit(c, doc, format_adele(out));
  } else {
    const FiniteAdele& x = in[0].finite;
    FiniteAdele out = op == "neg"   ? adele_neg(x)
                      : op == "add" ? adele_add(x, in[1].finite)
                                    : adele_mul(x, in[1].finite);
    doc["result"] = json_finite_adele(out);
    emit(c, doc, format_finite_adele(out));
  }
  return 0;
}

int run_idele_to_ideal(const Common& c, const std::string& idele_text) {
  SpecPtr s = parse_field(c.field);
  ParsedAdele a = parse_adele(s, idele_text);
  FiniteIdele x = try_invert(with_default_prec(a.finite, c.prec));
  FractionalIdeal I = map_to_fractional_ideals(x);
  json doc = envelope("idele-to-ideal");
  doc["ideal"] = format_fractional_ideal(I);
  doc["exponents"] = json_valuation_vector(frac_factorization(I));
  emit(c, doc, format_fractional_ideal(I));
  return 0;
}

int run_preimage(const Common& c, const std::string& ideal_text) {
  SpecPtr s = parse_field(c.field);
  FractionalIdeal I = parse_fractional_ideal(s, ideal_text);
  FiniteIdele x = preimage_idele(I);
  if (!frac_eq(map_to_fractional_ideals(x), I))
    fail(errc::invalid_argument, "preimage verification failed");
  json doc = envelope("preimage");
  doc["ideal"] = format_fractional_ideal(I);
  doc["idele"] = json_finite_adele(x.value());
  emit(c, doc, format_finite_idele(x));
  return 0;
}

int run_class_group(const Common& c) {
  SpecPtr s = parse_field(c.field);
  ClassGroup g = ClassGroup::of(s);
  json doc = envelope("class-group");
  json body = json_class_group(g);
  for (auto& [key, value] : body.items()) doc[key] = value;
  std::string text = "discriminant " + g.spec()->disc().get_str() + "\norder " +
                     std::to_string(g.order());
  for (int i = 0; i < g.order(); ++i)
    text += "\nform " + std::to_string(i) + ": " + format_quad_form(g.forms()[i]);
  text += "\ntable:";
  for (int i = 0; i < g.order(); ++i) {
    text += "\n";
    for (int j = 0; j < g.order(); ++j)
      text += (j ? " " : "") + std::to_string(g.compose(i, j));
  }
  emit(c, doc, text);
  return 0;
}

FieldElem random_nonzero(const SpecPtr& s, std::mt19937_64& rng) {
  for (;;) {
    FieldElem x = FieldElem::zero(s);
    switch (s->family()) {
      case Family::Rationals: {
        long num = static_cast<long>(rng() % 19) - 9;
        long den = 1 + static_cast<long>(rng() % 9);
        x = FieldElem::rational(s, mpq_class(num, den));
        break;
      }
      case Family::Quadratic: {
        long a = static_cast<long>(rng() % 19) - 9;
        long b = static_cast<long>(rng() % 19) - 9;
        long den = 1 + static_cast<long>(rng() % 4);
        x = FieldElem::quad(s, a, b, den);
        break;
      }
      case Family::FunctionField: {
        FqPoly f;
        for (int i = 0; i < 3; ++i)
          f.c.push_back(static_cast<Fq>(rng() % s->fq().q()));
        f.trim();
        x = FieldElem::ff(s, f, poly_one());
        break;
      }
    }
    if (!x.is_zero()) return x;
  }
}

// Randomized consistency demonstration for the correspondence between the
// ideal class group and the idele class quotient.
int run_ck_quotient_check(const Common& c) {
  SpecPtr s = parse_field(c.field);
  std::mt19937_64 rng(c.seed);
  const int kRounds = 5;

  int order = 1;
  int section_ok = 0;
  int composition_ok = 0;
  if (s->is_quadratic() && s->disc() < 0) {
    ClassGroup g = ClassGroup::of(s);
    order = g.order();
    std::vector<IdeleClass> sections;
    for (const QuadForm& f : g.forms()) {
      IdealClass cls = IdealClass::of_form(s, f);
      IdeleClass up = ideal_class_section(cls);
      if (!(idele_class_to_ideal_class(up) == cls))
        fail(errc::invalid_argument, "section round trip failed");
      sections.push_back(up);
      ++section_ok;
    }
    for (int i = 0; i < kRounds; ++i) {
      int a = static_cast<int>(rng() % order);
      int b = static_cast<int>(rng() % order);
      IdeleClass prod = IdeleClass::of(full_idele_mul(sections[a].representative(),
                                                      sections[b].representative()));
      if (!idele_class_eq(prod, sections[g.compose(a, b)]))
        fail(errc::invalid_argument, "composition coherence failed");
      ++composition_ok;
    }
  } else if (s->is_quadratic()) {
    fail(errc::unsupported_field, "class group machinery needs an imaginary quadratic field");
  }

  IdeleClass identity = IdeleClass::of(Idele::inj(FieldElem::one(s)));
  int diagonal_ok = 0;
  for (int i = 0; i < kRounds; ++i) {
    FieldElem k = random_nonzero(s, rng);
    if (!idele_class_eq(IdeleClass::of(Idele::inj(k)), identity))
      fail(errc::invalid_argument, "diagonal class is not the identity");
    if (!is_in_kernel_subgroup(IdeleClass::of(Idele::inj(k))))
      fail(errc::invalid_argument, "diagonal class left the kernel subgroup");
    ++diagonal_ok;
  }

  json doc = envelope("ck-quotient-check");
  doc["field"] = s->name();
  doc["order"] = order;
  doc["section_checks"] = section_ok;
  doc["composition_checks"] = composition_ok;
  doc["diagonal_checks"] = diagonal_ok;
  doc["ok"] = true;
  std::string text = "field " + s->name() + "\nclasses " + std::to_string(order) +
                     "\nsection round trips: " + std::to_string(section_ok) +
                     " ok\ncomposition checks: " + std::to_string(composition_ok) +
                     " ok\ndiagonal checks: " + std::to_string(diagonal_ok) + " ok";
  emit(c, doc, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic in adele rings and idele class groups of explicit "
               "global fields"};
  app.require_subcommand(1);

  Common c;
  std::string place_text;
  std::string elem_text;
  std::string op = "mul";
  std::vector<std::string> operands;
  std::string ideal_text;
  std::string adele_text;

  auto* val = app.add_subcommand("val", "valuation of a field element at a place");
  add_common(val, c);
  val->add_option("--place", place_text, "place")->required();
  val->add_option("element", elem_text, "field element")->required();

  auto* unif = app.add_subcommand("uniformizer", "element of valuation 1 at a place");
  add_common(unif, c);
  unif->add_option("--place", place_text, "place")->required();

  auto* fac = app.add_subcommand("factor-ideal", "factor a fractional ideal over places");
  add_common(fac, c);
  fac->add_option("ideal", ideal_text, "fractional ideal expression")->required();

  auto* aop = app.add_subcommand("adele-op", "arithmetic on adele literals");
  add_common(aop, c);
  aop->add_option("--op", op, "add | mul | neg | eq")->capture_default_str();
  aop->add_option("operands", operands, "adele literals")->expected(1, 2);

  auto* i2i = app.add_subcommand("idele-to-ideal",
                                 "fractional ideal of valuations of an idele");
  add_common(i2i, c);
  i2i->add_option("idele", adele_text, "idele literal (an invertible adele)")->required();

  auto* pre = app.add_subcommand("preimage", "idele mapping to a given fractional ideal");
  add_common(pre, c);
  pre->add_option("ideal", ideal_text, "fractional ideal expression")->required();

  auto* cg = app.add_subcommand("class-group",
                                "reduced forms and composition table of Cl(K)");
  add_common(cg, c);

  auto* ck = app.add_subcommand("ck-quotient-check",
                                "randomized consistency check of Cl(K) against the "
                                "idele class quotient");
  add_common(ck, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*val) return run_val(c, place_text, elem_text);
    if (*unif) return run_uniformizer(c, place_text);
    if (*fac) return run_factor_ideal(c, ideal_text);
    if (*aop) return run_adele_op(c, op, operands);
    if (*i2i) return run_idele_to_ideal(c, adele_text);
    if (*pre) return run_preimage(c, ideal_text);
    if (*cg) return run_class_group(c);
    if (*ck) return run_ck_quotient_check(c);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const math_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == errc::insufficient_precision ? 4 : 3;
  }
  return 0;
}
