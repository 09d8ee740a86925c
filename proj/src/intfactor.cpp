#include "powmat/intfactor.hpp"

#include <algorithm>
#include <stdexcept>

namespace powmat {

namespace {

mpz_class mulmod(const mpz_class& a, const mpz_class& b, const mpz_class& n) {
    return mpz_class(a * b % n);
}

// Brent's cycle-finding variant; n must be odd, composite, > 1.
mpz_class pollard_rho(const mpz_class& n) {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEuL);
    while (true) {
        mpz_class y = rng.get_z_range(n - 1) + 1;
        mpz_class c = rng.get_z_range(n - 1) + 1;
        mpz_class x = y, d = 1, q = 1, ys = y;
        unsigned long r = 1;
        const unsigned long block = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(block, r - k); ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, abs(x - y), n);
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += block;
            }
            r *= 2;
        }
        if (d == n) {
            do {
                ys = (mulmod(ys, ys, n) + c) % n;
                mpz_class diff = abs(x - ys);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_into(const mpz_class& n, std::map<mpz_class, int>& out) {
    if (n <= 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        ++out[n];
        return;
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(mpz_class(n / d), out);
}

}  // namespace

std::map<mpz_class, int> factorize(const mpz_class& n) {
    std::map<mpz_class, int> f;
    mpz_class m = abs(n);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (m > 1 && m % p == 0) {
            ++f[mpz_class(p)];
            m /= p;
        }
    }
    factor_into(m, f);
    return f;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = divs.size();
        mpz_class pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

SquarefreeSplit squarefree_part(const mpz_class& n) {
    if (n == 0) throw std::invalid_argument("squarefree part of zero");
    SquarefreeSplit s{1, 1};
    for (const auto& [p, e] : factorize(n)) {
        mpz_class half;
        mpz_pow_ui(half.get_mpz_t(), p.get_mpz_t(), e / 2);
        s.root *= half;
        if (e % 2) s.part *= p;
    }
    if (n < 0) s.part = -s.part;
    return s;
}

}  // namespace powmat
