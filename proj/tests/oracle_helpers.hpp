#pragma once

// Independent reference implementations for tests. These deliberately
// avoid the library's own algorithms: the characteristic polynomial
// comes from cofactor expansion over polynomial entries and roots come
// from a simultaneous-iteration solver, so agreement is meaningful.

#include <complex>
#include <random>
#include <vector>

#include "powmat/matrix.hpp"
#include "powmat/poly.hpp"
#include "powmat/rational.hpp"

namespace testhelp {

using powmat::Matrix;
using powmat::Poly;
using powmat::Rational;

using PolyGrid = std::vector<std::vector<Poly>>;

inline Poly cofactor_det(const PolyGrid& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly det;
    for (std::size_t r = 0; r < n; ++r) {
        PolyGrid minor;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            std::vector<Poly> row;
            for (std::size_t j = 1; j < n; ++j) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        Poly term = m[r][0] * cofactor_det(minor);
        if (r % 2 == 1) term = -term;
        det += term;
    }
    return det;
}

// det(xI - A) by cofactor expansion.
inline Poly oracle_charpoly(const Matrix& a) {
    const int n = a.dim();
    PolyGrid m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Poly cell = Poly(-a.at(i, j));
            if (i == j) cell += Poly::monomial(1);
            m[static_cast<std::size_t>(i)].push_back(cell);
        }
    }
    return cofactor_det(m);
}

inline Rational oracle_det(const Matrix& a) {
    const Poly cp = oracle_charpoly(a);
    const Rational c0 = cp.coeff(0);
    return a.dim() % 2 == 0 ? c0 : -c0;
}

// All complex roots by simultaneous (Weierstrass) iteration. Input need
// not be monic.
inline std::vector<std::complex<double>> oracle_roots(const Poly& f) {
    const int n = f.degree();
    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    std::complex<double> seed(0.5, 0.8), acc(1.0, 0.0);
    for (auto& zi : z) {
        acc *= seed;
        zi = acc;
    }
    const double lead = f.leading().to_double();
    for (int iter = 0; iter < 400; ++iter) {
        double worst = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            std::complex<double> denom(lead, 0.0);
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i) denom *= z[i] - z[j];
            const std::complex<double> step = f.eval(z[i]) / denom;
            z[i] -= step;
            worst = std::max(worst, std::abs(step));
        }
        if (worst < 1e-13) break;
    }
    return z;
}

inline Rational random_rational(std::mt19937_64& rng, int lo, int hi, int maxden = 1) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, maxden);
    return Rational(num(rng), den(rng));
}

inline Matrix random_int_matrix(std::mt19937_64& rng, int dim, int lo, int hi) {
    std::uniform_int_distribution<int> pick(lo, hi);
    std::vector<Rational> e;
    e.reserve(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
    for (int i = 0; i < dim * dim; ++i) e.emplace_back(pick(rng));
    return Matrix(dim, std::move(e));
}

}  // namespace testhelp
