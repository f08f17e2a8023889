#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "adelic/fq.hpp"
#include "adelic/intfactor.hpp"

using namespace adelic;

namespace {

FqPoly mk(std::initializer_list<Fq> lo_to_hi) {
  FqPoly f;
  f.c.assign(lo_to_hi);
  f.trim();
  return f;
}

FqPoly random_poly(const FqField& F, int deg, std::mt19937_64& rng) {
  FqPoly f;
  std::uniform_int_distribution<Fq> coeff(0, F.q() - 1);
  for (int i = 0; i < deg; ++i) f.c.push_back(coeff(rng));
  f.c.push_back(1 + coeff(rng) % (F.q() - 1));
  return f;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  FqField F(7, 1);
  CHECK(F.q() == 7);
  CHECK(F.add(5, 4) == 2);
  CHECK(F.mul(3, 5) == 1);
  CHECK(F.inv(3) == 5);
  CHECK(F.neg(0) == 0);
  CHECK(F.pow(3, 6) == 1);
  CHECK(F.from_int(mpz_class(-1)) == 6);
  CHECK_THROWS_AS(F.inv(0), math_error);
}

TEST_CASE("extension field arithmetic") {
  // F_4 with modulus x^2 + x + 1: gen^2 = gen + 1.
  FqField F4(2, 2);
  CHECK(F4.gen() == 2);
  CHECK(F4.mul(2, 2) == 3);
  CHECK(F4.mul(2, 3) == 1);
  CHECK(F4.inv(2) == 3);

  // F_9 with modulus x^2 + 1: gen^2 = -1 = 2.
  FqField F9(3, 2);
  CHECK(F9.gen() == 3);
  CHECK(F9.mul(3, 3) == 2);
  CHECK(F9.pow(F9.gen(), 8) == 1);
  // gen generates a group of order dividing 8 but x^2 = -1 has order 4.
  CHECK(F9.pow(F9.gen(), 4) == 1);

  // Every nonzero element of F_8 satisfies a^7 = 1.
  FqField F8(2, 3);
  for (Fq a = 1; a < 8; ++a) {
    CHECK(F8.pow(a, 7) == 1);
    CHECK(F8.mul(a, F8.inv(a)) == 1);
  }
}

TEST_CASE("field constructor rejects bad parameters") {
  CHECK_THROWS_AS(FqField(4, 1), math_error);
  CHECK_THROWS_AS(FqField(6, 2), math_error);
  CHECK_THROWS_AS(FqField(17, 2), math_error);
  CHECK_THROWS_AS(FqField(2, 5), math_error);
}

TEST_CASE("polynomial division and gcd") {
  FqField F(3, 1);
  FqPoly a = mk({1, 0, 1});  // 1 + t^2
  FqPoly b = mk({1, 1});     // 1 + t
  auto [q, r] = poly_divmod(F, a, b);
  CHECK(poly_add(F, poly_mul(F, q, b), r) == a);
  CHECK(r.degree() < b.degree());

  // gcd(t^3 - t, t^2 - 1) = t^2 - 1 up to the monic normalization.
  FqPoly f = mk({0, 2, 0, 1});
  FqPoly g = mk({2, 0, 1});
  CHECK(poly_gcd(F, f, g) == g);
}

TEST_CASE("irreducibility over small fields") {
  FqField F2(2, 1);
  CHECK(poly_is_irreducible(F2, mk({1, 1, 1})));        // t^2+t+1
  CHECK_FALSE(poly_is_irreducible(F2, mk({1, 0, 1})));  // t^2+1 = (t+1)^2
  CHECK(poly_is_irreducible(F2, mk({1, 1, 0, 1})));     // t^3+t+1
  FqField F3(3, 1);
  CHECK(poly_is_irreducible(F3, mk({1, 0, 1})));  // t^2+1, since -1 is not a square mod 3
  CHECK_FALSE(poly_is_irreducible(F3, mk({2, 0, 1})));  // t^2-1
}

TEST_CASE("monic irreducible enumeration matches the known counts") {
  FqField F2(2, 1);
  auto irr = monic_irreducibles_up_to_degree(F2, 3);
  // Degrees 1..3 over F_2: t, t+1; t^2+t+1; t^3+t+1, t^3+t^2+1.
  REQUIRE(irr.size() == 5);
  CHECK(irr[0] == mk({0, 1}));
  CHECK(irr[1] == mk({1, 1}));
  CHECK(irr[2] == mk({1, 1, 1}));
  CHECK(irr[3] == mk({1, 1, 0, 1}));
  CHECK(irr[4] == mk({1, 0, 1, 1}));

  FqField F3(3, 1);
  auto irr3 = monic_irreducibles_up_to_degree(F3, 2);
  // 3 linear + (9-3)/2 = 3 quadratic.
  CHECK(irr3.size() == 6);
}

TEST_CASE("factorization of fixed polynomials") {
  FqField F2(2, 1);
  // t^4 + t^2 = t^2 (t+1)^2 over F_2.
  auto f = poly_factor(F2, mk({0, 0, 1, 0, 1}));
  REQUIRE(f.size() == 2);
  CHECK(f.at(mk({0, 1})) == 2);
  CHECK(f.at(mk({1, 1})) == 2);

  FqField F3(3, 1);
  // t^3 - t = t (t+1) (t+2).
  auto g = poly_factor(F3, mk({0, 2, 0, 1}));
  REQUIRE(g.size() == 3);
  CHECK(g.at(mk({0, 1})) == 1);
  CHECK(g.at(mk({1, 1})) == 1);
  CHECK(g.at(mk({2, 1})) == 1);

  // (t^2+1)^3 over F_3 exercises the char-p part of the squarefree split.
  FqPoly t2p1 = mk({1, 0, 1});
  FqPoly cube = poly_mul(F3, poly_mul(F3, t2p1, t2p1), t2p1);
  auto h = poly_factor(F3, cube);
  REQUIRE(h.size() == 1);
  CHECK(h.at(t2p1) == 3);
}

TEST_CASE("factorization round trip on random products") {
  std::mt19937_64 rng(0x1234abcdULL);
  for (long p : {2L, 3L, 5L}) {
    for (int e = 1; e <= 2; ++e) {
      FqField F(p, e);
      for (int iter = 0; iter < 12; ++iter) {
        FqPoly prod = poly_one();
        for (int j = 0; j < 3; ++j) {
          std::uniform_int_distribution<int> dd(1, 3);
          prod = poly_mul(F, prod, random_poly(F, dd(rng), rng));
        }
        auto fac = poly_factor(F, prod);
        FqPoly back = poly_one();
        for (const auto& [g, m] : fac) {
          CHECK(poly_is_irreducible(F, g));
          back = poly_mul(F, back, poly_pow(F, g, m));
        }
        CHECK(poly_monic(F, back) == poly_monic(F, prod));
      }
    }
  }
}

TEST_CASE("integer factorization and modular square roots") {
  auto f = factor_integer(mpz_class(360));
  REQUIRE(f.size() == 3);
  CHECK(f.at(2) == 3);
  CHECK(f.at(3) == 2);
  CHECK(f.at(5) == 1);

  mpz_class semi = mpz_class(1000003) * mpz_class(1000033);
  auto g = factor_integer(semi);
  REQUIRE(g.size() == 2);
  CHECK(g.at(1000003) == 1);
  CHECK(g.at(1000033) == 1);

  CHECK(is_prime(mpz_class(2)));
  CHECK_FALSE(is_prime(mpz_class(1)));
  CHECK(is_squarefree(mpz_class(-5)));
  CHECK_FALSE(is_squarefree(mpz_class(12)));

  mpz_class r = sqrt_mod(mpz_class(2), mpz_class(7));
  CHECK((r * r) % 7 == 2);
  mpz_class r2 = sqrt_mod(mpz_class(5), mpz_class(41));  // 41 = 1 mod 8 path
  CHECK((r2 * r2) % 41 == 5);
}
