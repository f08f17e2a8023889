#include "adelic/intfactor.hpp"

#include "adelic/errors.hpp"

namespace adelic {

bool is_prime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

int remove_factor(mpz_class& n, const mpz_class& p) {
  return static_cast<int>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

namespace {

mpz_class pollard_rho(const mpz_class& n) {
  // Brent's variant; the increment c walks a fixed sequence, so the whole
  // factorization is deterministic.
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1, diff;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      diff = x - y;
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_rec(const mpz_class& n, std::map<mpz_class, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  mpz_class d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::map<mpz_class, int> factor_integer(const mpz_class& n) {
  if (n == 0) fail(errc::invalid_argument, "cannot factor zero");
  mpz_class m = abs(n);
  std::map<mpz_class, int> out;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
    if (m == 1) return out;
    int e = remove_factor(m, mpz_class(p));
    if (e > 0) out[mpz_class(p)] = e;
  }
  // Trial division up to 10^5 covers everything the library generates itself.
  for (long p = 53; p < 100000 && m > 1; p += 2) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
      int e = remove_factor(m, mpz_class(p));
      out[mpz_class(p)] = e;
    }
  }
  if (m > 1) factor_rec(m, out);
  return out;
}

bool is_squarefree(const mpz_class& n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factor_integer(n))
    if (e > 1) return false;
  return true;
}

mpz_class sqrt_mod(const mpz_class& a0, const mpz_class& p) {
  mpz_class a = a0 % p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1)
    fail(errc::invalid_argument, "sqrt_mod of a non-residue");

  auto powmod = [&](mpz_class base, mpz_class exp) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
    return r;
  };

  if (p % 4 == 3) return powmod(a, (p + 1) / 4);

  // Tonelli-Shanks. p - 1 = q * 2^s with q odd.
  mpz_class q = p - 1;
  unsigned long s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  mpz_class z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  mpz_class m = s, c = powmod(z, q), t = powmod(a, q), r = powmod(a, (q + 1) / 2);
  while (t != 1) {
    mpz_class tt = t;
    unsigned long i = 0;
    while (tt != 1) {
      tt = (tt * tt) % p;
      ++i;
    }
    mpz_class b = c;
    for (mpz_class j = 0; j < m - i - 1; ++j) b = (b * b) % p;
    m = i;
    c = (b * b) % p;
    t = (t * c) % p;
    r = (r * b) % p;
  }
  return r;
}

}  // namespace adelic
