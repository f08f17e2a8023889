#pragma once

#include <map>

#include <gmpxx.h>

namespace adelic {

bool is_prime(const mpz_class& n);

// Prime factorization of |n|, n != 0. Trial division followed by Brent-cycle
// rho with deterministic parameters.
std::map<mpz_class, int> factor_integer(const mpz_class& n);

bool is_squarefree(const mpz_class& n);

// Largest e with p^e | n, dividing n down in place.
int remove_factor(mpz_class& n, const mpz_class& p);

// Square root of a mod an odd prime p (a must be a residue); Tonelli-Shanks.
mpz_class sqrt_mod(const mpz_class& a, const mpz_class& p);

}  // namespace adelic
