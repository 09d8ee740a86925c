#include "powmat/cfsolve.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "powmat/errors.hpp"

namespace powmat {

namespace {

Poly pow_mod(const Poly& base, long long e, const Poly& f) {
    Poly result{Rational(1)};
    Poly b = base % f;
    while (e > 0) {
        if (e & 1) result = (result * b) % f;
        b = (b * b) % f;
        e >>= 1;
    }
    return result;
}

}  // namespace

int SpectralBasis::order() const {
    int sum = 0;
    for (const auto& b : blocks) sum += b.multiplicity * b.handle.degree();
    return sum;
}

bool block_order_before(const Poly& a, const Poly& b) {
    return poly_order_before(a, b);
}

SpectralBasis assemble_basis(int low_degree, std::vector<std::pair<Poly, int>> blocks) {
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
        return block_order_before(a.first, b.first);
    });
    SpectralBasis basis;
    basis.low_degree = low_degree;
    int labeled = 0;
    for (auto& [poly, mult] : blocks) {
        std::string label;
        if (poly.degree() >= 2) {
            label = labeled == 0 ? "_R" : "_R" + std::to_string(labeled);
            ++labeled;
        }
        basis.blocks.push_back({FactorHandle::make(poly, label), mult});
    }
    return basis;
}

SpectralBasis build_spectral_basis(const Poly& p) {
    if (p.degree() < 1 || !p.is_monic())
        throw std::invalid_argument("spectral basis needs a monic polynomial of degree >= 1");

    const int d = p.low_degree();
    const Poly core = p.shift_down(d);

    std::vector<std::pair<Poly, int>> raw;
    if (core.degree() >= 1) {
        for (const auto& [factor, mult] : squarefree_decompose(core)) {
            auto [roots, remainder] = extract_rational_roots(factor);
            for (const Rational& r : roots)
                raw.emplace_back(Poly::linear_root(r), mult);
            if (remainder.degree() >= 1) raw.emplace_back(remainder, mult);
        }
    }
    return assemble_basis(d, std::move(raw));
}

RecurrenceFitter::RecurrenceFitter(SpectralBasis basis) : basis_(std::move(basis)) {
    const int d = basis_.low_degree;
    const int order = basis_.order();
    if (order == 0) return;

    // Power sums of each block, far enough for every equation index.
    std::vector<std::vector<Rational>> psums;
    psums.reserve(basis_.blocks.size());
    for (const auto& b : basis_.blocks)
        psums.push_back(power_sums(b.handle.modulus(),
                                   d + order + b.handle.degree() - 1));

    // Equation at index k = d+1+row; unknown gamma_{b,t,e} contributes
    // k^t * p_b(k+e), the trace of x^{k+e} in block b.
    std::vector<std::vector<Rational>> m(order);
    for (int row = 0; row < order; ++row) {
        const long long k = d + 1 + row;
        auto& r = m[row];
        r.reserve(order);
        for (std::size_t bi = 0; bi < basis_.blocks.size(); ++bi) {
            const auto& b = basis_.blocks[bi];
            for (int t = 0; t < b.multiplicity; ++t) {
                const Rational kt = Rational(k).pow(t);
                for (int e = 0; e < b.handle.degree(); ++e)
                    r.push_back(kt * psums[bi][static_cast<std::size_t>(k + e)]);
            }
        }
    }

    // Exact Gauss-Jordan inversion. The system is provably nonsingular
    // for any spectral basis, so a failed pivot is a bug.
    inv_.assign(order, std::vector<Rational>(order, Rational(0)));
    for (int i = 0; i < order; ++i) inv_[i][i] = Rational(1);
    for (int col = 0; col < order; ++col) {
        int pivot = -1;
        for (int row = col; row < order; ++row)
            if (!m[row][col].is_zero()) { pivot = row; break; }
        if (pivot < 0) throw internal_error("fitting system is singular");
        std::swap(m[col], m[pivot]);
        std::swap(inv_[col], inv_[pivot]);
        const Rational scale = m[col][col].reciprocal();
        for (int j = 0; j < order; ++j) {
            m[col][j] *= scale;
            inv_[col][j] *= scale;
        }
        for (int row = 0; row < order; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            const Rational factor = m[row][col];
            for (int j = 0; j < order; ++j) {
                m[row][j] -= factor * m[col][j];
                inv_[row][j] -= factor * inv_[col][j];
            }
        }
    }
}

ClosedFormSeq RecurrenceFitter::solve(const InitialConditions& init) const {
    const int order = basis_.order();
    if (static_cast<int>(init.values.size()) != order)
        throw std::invalid_argument("initial conditions must match the basis order");
    if (init.start_index != basis_.low_degree + 1)
        throw std::invalid_argument("initial conditions must start at low_degree + 1");

    ClosedFormSeq cf;
    cf.threshold = basis_.low_degree;
    if (order == 0) return cf;

    std::vector<Rational> gamma(order, Rational(0));
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            gamma[i] += inv_[i][j] * init.values[static_cast<std::size_t>(j)];

    std::size_t idx = 0;
    for (const auto& b : basis_.blocks) {
        for (int t = 0; t < b.multiplicity; ++t) {
            std::vector<Rational> coords(gamma.begin() + static_cast<long>(idx),
                                         gamma.begin() + static_cast<long>(idx) + b.handle.degree());
            idx += static_cast<std::size_t>(b.handle.degree());
            cf.terms.push_back({b.handle, t, AlgValue(b.handle, Poly(std::move(coords)))});
        }
    }
    return cf;
}

ClosedFormSeq solve_cfinite(const SpectralBasis& basis, const InitialConditions& init) {
    return RecurrenceFitter(basis).solve(init);
}

Rational eval_closed_form(const ClosedFormSeq& cf, long long k) {
    if (k < cf.threshold && !cf.valid_all_k)
        throw singular_error("closed form is only valid for " + cf.index_symbol +
                             " >= " + std::to_string(cf.threshold));
    Rational sum(0);
    for (const auto& term : cf.terms) {
        if (term.coeff.is_zero()) continue;
        const Poly& f = term.handle.modulus();
        Poly xk;
        if (k >= 0) {
            xk = poly_powmod(k, f);
        } else {
            xk = pow_mod(f.x_inverse_mod(), -k, f);
        }
        const AlgValue v = term.coeff * AlgValue(term.handle, xk);
        Rational contrib = v.trace();
        if (term.kpower > 0) contrib *= Rational(k).pow(term.kpower);
        sum += contrib;
    }
    return sum;
}

}  // namespace powmat
