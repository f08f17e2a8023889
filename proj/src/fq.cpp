#include "adelic/fq.hpp"

#include <algorithm>
#include <random>

namespace adelic {

namespace {

struct ModEntry {
  int p, e;
  std::array<std::uint32_t, 4> low;  // c_0..c_{e-1}
};

// Least-index monic irreducible x^e + c_{e-1}x^{e-1} + ... + c_0 over F_p,
// index = sum c_i p^i. Fixed table; regenerating it yields the same values.
constexpr ModEntry kModTable[] = {
    {2, 2, {1, 1, 0, 0}},  {2, 3, {1, 1, 0, 0}},  {2, 4, {1, 1, 0, 0}},
    {3, 2, {1, 0, 0, 0}},  {3, 3, {1, 2, 0, 0}},  {3, 4, {2, 1, 0, 0}},
    {5, 2, {2, 0, 0, 0}},  {5, 3, {1, 1, 0, 0}},  {5, 4, {2, 0, 0, 0}},
    {7, 2, {1, 0, 0, 0}},  {7, 3, {2, 0, 0, 0}},  {7, 4, {1, 1, 0, 0}},
    {11, 2, {1, 0, 0, 0}}, {11, 3, {4, 1, 0, 0}}, {11, 4, {2, 1, 0, 0}},
    {13, 2, {2, 0, 0, 0}}, {13, 3, {2, 0, 0, 0}}, {13, 4, {2, 0, 0, 0}},
};

bool small_is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

FqField::FqField(long p, int e) : p_(p), e_(e) {
  if (!small_is_prime(p)) fail(errc::not_prime, "field characteristic must be prime");
  if (e < 1) fail(errc::invalid_argument, "extension degree must be >= 1");
  if (e == 1) {
    if (p >= (1L << 16)) fail(errc::unsupported_field, "prime field size must be < 2^16");
    q_ = static_cast<std::uint32_t>(p);
    return;
  }
  if (p > 13 || e > 4)
    fail(errc::unsupported_field, "extension fields limited to p <= 13, e <= 4");
  long q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  q_ = static_cast<std::uint32_t>(q);
  for (const auto& m : kModTable) {
    if (m.p == p && m.e == e) {
      for (int i = 0; i < e; ++i) mod_[i] = m.low[i];
      mod_[e] = 1;
      return;
    }
  }
  fail(errc::unsupported_field, "no modulus table entry");
}

Fq FqField::gen() const {
  if (e_ < 2) fail(errc::invalid_argument, "prime field has no extension generator");
  return static_cast<Fq>(p_);
}

Fq FqField::from_int(const mpz_class& n) const {
  mpz_class r = n % p_;
  if (r < 0) r += p_;
  return static_cast<Fq>(r.get_ui());
}

std::array<std::uint32_t, 4> FqField::decode(Fq a) const {
  std::array<std::uint32_t, 4> c{};
  for (int i = 0; i < e_; ++i) {
    c[i] = a % p_;
    a /= static_cast<Fq>(p_);
  }
  return c;
}

Fq FqField::encode(const std::array<std::uint32_t, 4>& c) const {
  Fq a = 0;
  for (int i = e_ - 1; i >= 0; --i) a = a * static_cast<Fq>(p_) + c[i];
  return a;
}

Fq FqField::add(Fq a, Fq b) const {
  if (e_ == 1) return (a + b) % static_cast<Fq>(p_);
  auto ca = decode(a), cb = decode(b);
  for (int i = 0; i < e_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
  return encode(ca);
}

Fq FqField::neg(Fq a) const {
  if (e_ == 1) return a == 0 ? 0 : static_cast<Fq>(p_) - a;
  auto c = decode(a);
  for (int i = 0; i < e_; ++i) c[i] = c[i] == 0 ? 0 : static_cast<std::uint32_t>(p_) - c[i];
  return encode(c);
}

Fq FqField::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq FqField::mul(Fq a, Fq b) const {
  if (e_ == 1) return static_cast<Fq>((static_cast<std::uint64_t>(a) * b) % p_);
  auto ca = decode(a), cb = decode(b);
  std::array<std::uint64_t, 7> prod{};
  for (int i = 0; i < e_; ++i)
    for (int j = 0; j < e_; ++j) prod[i + j] += static_cast<std::uint64_t>(ca[i]) * cb[j];
  // Reduce mod the monic modulus: x^e = -(c_{e-1}x^{e-1}+...+c_0).
  for (int i = 2 * e_ - 2; i >= e_; --i) {
    std::uint64_t top = prod[i] % p_;
    prod[i] = 0;
    if (top == 0) continue;
    for (int j = 0; j < e_; ++j) {
      std::uint64_t sub = (top * mod_[j]) % p_;
      prod[i - e_ + j] += static_cast<std::uint64_t>(p_) - sub;
    }
  }
  std::array<std::uint32_t, 4> out{};
  for (int i = 0; i < e_; ++i) out[i] = static_cast<std::uint32_t>(prod[i] % p_);
  return encode(out);
}

Fq FqField::pow(Fq a, std::uint64_t n) const {
  Fq r = 1;
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

Fq FqField::inv(Fq a) const {
  if (a == 0) fail(errc::not_invertible, "inverse of zero in F_q");
  return pow(a, static_cast<std::uint64_t>(q_) - 2);
}

bool FqPoly::operator<(const FqPoly& o) const {
  if (c.size() != o.c.size()) return c.size() < o.c.size();
  for (std::size_t i = c.size(); i-- > 0;)
    if (c[i] != o.c[i]) return c[i] < o.c[i];
  return false;
}

FqPoly poly_zero() { return {}; }
FqPoly poly_one() { return {{1}}; }
FqPoly poly_t() { return {{0, 1}}; }
FqPoly poly_const(Fq a) { return a == 0 ? FqPoly{} : FqPoly{{a}}; }

FqPoly poly_add(const FqField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    Fq x = i < a.c.size() ? a.c[i] : 0;
    Fq y = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = F.add(x, y);
  }
  r.trim();
  return r;
}

FqPoly poly_neg(const FqField& F, const FqPoly& a) {
  FqPoly r = a;
  for (auto& x : r.c) x = F.neg(x);
  return r;
}

FqPoly poly_sub(const FqField& F, const FqPoly& a, const FqPoly& b) {
  return poly_add(F, a, poly_neg(F, b));
}

FqPoly poly_mul(const FqField& F, const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  FqPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  }
  r.trim();
  return r;
}

FqPoly poly_scale(const FqField& F, Fq s, const FqPoly& a) {
  if (s == 0) return {};
  FqPoly r = a;
  for (auto& x : r.c) x = F.mul(s, x);
  r.trim();
  return r;
}

std::pair<FqPoly, FqPoly> poly_divmod(const FqField& F, const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) fail(errc::invalid_argument, "polynomial division by zero");
  FqPoly rem = a, quot;
  int db = b.degree();
  if (a.degree() >= db) quot.c.assign(a.degree() - db + 1, 0);
  Fq lead_inv = F.inv(b.leading());
  while (!rem.is_zero() && rem.degree() >= db) {
    int shift = rem.degree() - db;
    Fq coef = F.mul(rem.leading(), lead_inv);
    quot.c[shift] = coef;
    for (int i = 0; i <= db; ++i)
      rem.c[shift + i] = F.sub(rem.c[shift + i], F.mul(coef, b.c[i]));
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

FqPoly poly_mod(const FqField& F, const FqPoly& a, const FqPoly& b) {
  return poly_divmod(F, a, b).second;
}

FqPoly poly_div_exact(const FqField& F, const FqPoly& a, const FqPoly& b) {
  auto [q, r] = poly_divmod(F, a, b);
  if (!r.is_zero()) fail(errc::invalid_argument, "inexact polynomial division");
  return q;
}

FqPoly poly_monic(const FqField& F, const FqPoly& a) {
  if (a.is_zero() || a.leading() == 1) return a;
  return poly_scale(F, F.inv(a.leading()), a);
}

FqPoly poly_gcd(const FqField& F, FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, a);
}

FqPoly poly_derivative(const FqField& F, const FqPoly& a) {
  FqPoly r;
  if (a.c.size() < 2) return r;
  r.c.resize(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i)
    r.c[i - 1] = F.mul(F.from_int(static_cast<long>(i)), a.c[i]);
  r.trim();
  return r;
}

FqPoly poly_pow(const FqField& F, const FqPoly& a, unsigned long n) {
  FqPoly r = poly_one(), base = a;
  while (n) {
    if (n & 1) r = poly_mul(F, r, base);
    base = poly_mul(F, base, base);
    n >>= 1;
  }
  return r;
}

FqPoly poly_powmod(const FqField& F, const FqPoly& a, const mpz_class& n, const FqPoly& m) {
  FqPoly r = poly_mod(F, poly_one(), m);
  FqPoly base = poly_mod(F, a, m);
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = poly_mod(F, poly_mul(F, r, r), m);
    if (mpz_tstbit(n.get_mpz_t(), i)) r = poly_mod(F, poly_mul(F, r, base), m);
  }
  return r;
}

Fq poly_eval(const FqField& F, const FqPoly& a, Fq x) {
  Fq r = 0;
  for (std::size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, x), a.c[i]);
  return r;
}

namespace {

// Inverse Frobenius on coefficients: the p-th root of c in F_q is c^(q/p).
Fq coeff_pth_root(const FqField& F, Fq c) {
  std::uint64_t exp = F.q() / static_cast<std::uint64_t>(F.p());
  return F.pow(c, exp);
}

// f with f' = 0 is a p-th power; extract its p-th root.
FqPoly poly_pth_root(const FqField& F, const FqPoly& f) {
  long p = F.p();
  FqPoly g;
  g.c.resize(f.c.size() / p + 1, 0);
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (f.c[i] == 0) continue;
    // Only exponents divisible by p occur.
    g.c[i / p] = coeff_pth_root(F, f.c[i]);
  }
  g.trim();
  return g;
}

// Squarefree decomposition for monic f (char p variant); returns map from
// squarefree product to multiplicity, products for distinct multiplicities
// being pairwise coprime.
void squarefree_decompose(const FqField& F, const FqPoly& f, int outer_mult,
                          std::map<FqPoly, int>& out_products) {
  if (f.degree() < 1) return;
  FqPoly fp = poly_derivative(F, f);
  if (fp.is_zero()) {
    squarefree_decompose(F, poly_pth_root(F, f), outer_mult * static_cast<int>(F.p()),
                         out_products);
    return;
  }
  FqPoly c = poly_gcd(F, f, fp);
  FqPoly w = poly_div_exact(F, f, c);
  int i = 1;
  while (w.degree() > 0) {
    FqPoly y = poly_gcd(F, w, c);
    FqPoly z = poly_div_exact(F, w, y);
    if (z.degree() > 0) out_products[z] += outer_mult * i;
    w = y;
    c = poly_div_exact(F, c, y);
    ++i;
  }
  // What is left of c is the part whose factor multiplicities are divisible
  // by p; it is a p-th power, so take the root once and recurse.
  if (c.degree() > 0)
    squarefree_decompose(F, poly_pth_root(F, c), outer_mult * static_cast<int>(F.p()),
                         out_products);
}

FqPoly random_poly_below(const FqField& F, int deg_bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, F.q() - 1);
  FqPoly h;
  h.c.resize(static_cast<std::size_t>(deg_bound), 0);
  for (auto& x : h.c) x = static_cast<Fq>(dist(rng));
  h.trim();
  return h;
}

// Cantor-Zassenhaus equal-degree splitting of a monic squarefree g whose
// irreducible factors all have degree d.
void equal_degree_split(const FqField& F, const FqPoly& g, int d, std::mt19937_64& rng,
                        std::vector<FqPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  mpz_class qd;
  mpz_ui_pow_ui(qd.get_mpz_t(), F.q(), static_cast<unsigned long>(d));
  for (;;) {
    FqPoly h = random_poly_below(F, g.degree(), rng);
    if (h.degree() < 1) continue;
    FqPoly t;
    if (F.p() == 2) {
      // Additive trace to F_2: h + h^2 + h^4 + ... (e*d - 1 squarings).
      int e_total = F.ext_degree() * d;
      FqPoly acc = poly_mod(F, h, g), sq = acc;
      for (int i = 1; i < e_total; ++i) {
        sq = poly_mod(F, poly_mul(F, sq, sq), g);
        acc = poly_add(F, acc, sq);
      }
      t = acc;
    } else {
      mpz_class exp = (qd - 1) / 2;
      t = poly_sub(F, poly_powmod(F, h, exp, g), poly_one());
    }
    FqPoly u = poly_gcd(F, t, g);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      equal_degree_split(F, u, d, rng, out);
      equal_degree_split(F, poly_div_exact(F, g, u), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::map<FqPoly, int> poly_factor(const FqField& F, const FqPoly& a) {
  if (a.is_zero()) fail(errc::invalid_argument, "cannot factor the zero polynomial");
  std::map<FqPoly, int> result;
  FqPoly f = poly_monic(F, a);
  if (f.degree() < 1) return result;

  std::map<FqPoly, int> sq_parts;
  squarefree_decompose(F, f, 1, sq_parts);

  // Fixed seed per call keeps factorizations reproducible.
  std::mt19937_64 rng(0x51a7e11edeadbeefULL);
  for (const auto& [part, mult] : sq_parts) {
    // Distinct-degree splitting of the squarefree part.
    FqPoly g = part;
    FqPoly x = poly_t();
    FqPoly h = poly_mod(F, x, g);
    int d = 0;
    while (g.degree() >= 2 * (d + 1)) {
      ++d;
      h = poly_powmod(F, h, mpz_class(F.q()), g);
      FqPoly gd = poly_gcd(F, poly_sub(F, h, x), g);
      if (gd.degree() > 0) {
        std::vector<FqPoly> irr;
        equal_degree_split(F, gd, d, rng, irr);
        for (const auto& pi : irr) result[pi] += mult;
        g = poly_div_exact(F, g, gd);
        h = poly_mod(F, h, g);
      }
    }
    if (g.degree() > 0) result[g] += mult;
  }
  return result;
}

bool poly_is_irreducible(const FqField& F, const FqPoly& a) {
  if (a.degree() < 1) return false;
  auto f = poly_factor(F, a);
  return f.size() == 1 && f.begin()->second == 1;
}

std::vector<FqPoly> monic_irreducibles_up_to_degree(const FqField& F, int max_deg) {
  std::vector<FqPoly> out;
  for (int d = 1; d <= max_deg; ++d) {
    // Enumerate monic degree-d polynomials by index of the low coefficients.
    mpz_class count;
    mpz_ui_pow_ui(count.get_mpz_t(), F.q(), static_cast<unsigned long>(d));
    for (mpz_class k = 0; k < count; ++k) {
      FqPoly f;
      f.c.resize(static_cast<std::size_t>(d) + 1, 0);
      mpz_class kk = k;
      for (int i = 0; i < d; ++i) {
        mpz_class digit = kk % F.q();
        f.c[static_cast<std::size_t>(i)] = static_cast<Fq>(digit.get_ui());
        kk /= F.q();
      }
      f.c[static_cast<std::size_t>(d)] = 1;
      if (poly_is_irreducible(F, f)) out.push_back(f);
    }
  }
  return out;
}

}  // namespace adelic
