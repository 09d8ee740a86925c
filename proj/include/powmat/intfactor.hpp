#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

namespace powmat {

// Prime factorization of |n| (trial division plus Pollard rho; primality
// certified by GMP's Miller-Rabin). Empty map for |n| <= 1.
std::map<mpz_class, int> factorize(const mpz_class& n);

// All positive divisors of |n|, unsorted.
std::vector<mpz_class> divisors(const mpz_class& n);

// |n| = square * part with part squarefree; returns {square root, part}.
// The sign of n is carried by part.
struct SquarefreeSplit {
    mpz_class root;  // s with s^2 * part = n
    mpz_class part;  // squarefree, same sign as n
};
SquarefreeSplit squarefree_part(const mpz_class& n);

}  // namespace powmat
