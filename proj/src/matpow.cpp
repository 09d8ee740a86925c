#include "powmat/matpow.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

#include "powmat/errors.hpp"

namespace powmat {

namespace {

// Residues of one entry's coefficients, indexed [block][kpower].
using EntryResidues = std::vector<std::vector<Poly>>;

// Splits every block that shares a proper factor with some entry's
// residue. Splitting f into g * (f/g) partitions the roots, so each
// trace contribution (and hence every closed-form value) is unchanged;
// what it buys is that a residue divisible by g becomes exactly zero on
// the g part, letting that entry shed spectral blocks it never uses.
// Runs to a fixpoint shared by all entries so the basis stays common.
void refine_by_support(std::vector<Poly>& blocks, std::vector<int>& mults,
                       std::vector<EntryResidues>& residues) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t b = 0; b < blocks.size() && !changed; ++b) {
            const Poly& f = blocks[b];
            if (f.degree() < 2) continue;
            for (const auto& entry : residues) {
                for (const Poly& r : entry[b]) {
                    if (r.is_zero()) continue;
                    const Poly g = poly_gcd(r, f);
                    if (g.degree() == 0 || g.degree() == f.degree()) continue;
                    const Poly h = f / g;
                    blocks[b] = g;
                    blocks.insert(blocks.begin() + static_cast<long>(b) + 1, h);
                    mults.insert(mults.begin() + static_cast<long>(b) + 1, mults[b]);
                    for (auto& e : residues) {
                        std::vector<Poly> mod_g, mod_h;
                        mod_g.reserve(e[b].size());
                        mod_h.reserve(e[b].size());
                        for (const Poly& rr : e[b]) {
                            mod_g.push_back(rr % g);
                            mod_h.push_back(rr % h);
                        }
                        e[b] = std::move(mod_g);
                        e.insert(e.begin() + static_cast<long>(b) + 1, std::move(mod_h));
                    }
                    changed = true;
                    break;
                }
                if (changed) break;
            }
        }
    }
}

}  // namespace

ClosedFormMatrix power_matrix_symbolic(const Matrix& a) {
    const int n = a.dim();
    const CharPolyResult cp = faddeev_leverrier(a);
    const SpectralBasis first_basis = build_spectral_basis(cp.charpoly);
    const int d = first_basis.low_degree;
    const int order = first_basis.order();
    const RecurrenceFitter fitter(first_basis);

    // Initial windows (A^r)[i,j], r = d+1..n, shared by all entries.
    std::vector<Matrix> powers;
    powers.reserve(static_cast<std::size_t>(order));
    if (order > 0) {
        powers.push_back(a.pow(d + 1));
        for (int r = 1; r < order; ++r) powers.push_back(powers.back() * a);
    }

    std::vector<ClosedFormSeq> solved;
    solved.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            InitialConditions init;
            init.start_index = d + 1;
            init.values.reserve(static_cast<std::size_t>(order));
            for (const Matrix& p : powers) init.values.push_back(p.at(i, j));
            solved.push_back(fitter.solve(init));
        }
    }

    // Unpack residues per entry, refine the shared basis, reassemble.
    std::vector<Poly> block_polys;
    std::vector<int> mults;
    for (const auto& b : first_basis.blocks) {
        block_polys.push_back(b.handle.modulus());
        mults.push_back(b.multiplicity);
    }
    std::vector<EntryResidues> residues(solved.size());
    for (std::size_t e = 0; e < solved.size(); ++e) {
        residues[e].resize(block_polys.size());
        std::size_t term = 0;
        for (std::size_t b = 0; b < block_polys.size(); ++b)
            for (int t = 0; t < mults[b]; ++t)
                residues[e][b].push_back(solved[e].terms[term++].coeff.residue());
    }
    refine_by_support(block_polys, mults, residues);

    std::vector<std::pair<Poly, int>> pairs;
    for (std::size_t b = 0; b < block_polys.size(); ++b)
        pairs.emplace_back(block_polys[b], mults[b]);

    ClosedFormMatrix cfm;
    cfm.dim = n;
    cfm.threshold = d;
    cfm.paper_threshold = n;
    cfm.invertible = !cp.determinant.is_zero();
    cfm.basis = assemble_basis(d, std::move(pairs));
    cfm.source = a;
    if (cfm.invertible != (d == 0))
        throw internal_error("determinant and charpoly low degree disagree");

    cfm.entries.reserve(solved.size());
    for (std::size_t e = 0; e < solved.size(); ++e) {
        ClosedFormSeq seq;
        seq.threshold = d;
        seq.valid_all_k = cfm.invertible;
        for (const auto& block : cfm.basis.blocks) {
            std::size_t old = 0;
            while (block_polys[old] != block.handle.modulus()) ++old;
            for (int t = 0; t < block.multiplicity; ++t) {
                const Poly& r = residues[e][old][static_cast<std::size_t>(t)];
                if (r.is_zero()) continue;
                seq.terms.push_back({block.handle, t, AlgValue(block.handle, r)});
            }
        }
        cfm.entries.push_back(std::move(seq));
    }
    return cfm;
}

Matrix power_matrix_integer(const Matrix& a, long long k) {
    if (k >= 0) return a.pow(k);
    if (k == std::numeric_limits<long long>::min())
        throw std::invalid_argument("exponent magnitude out of range");
    return mat_inverse(a).pow(-k);
}

ClosedFormMatrix power_matrix_inverse_symbolic(const Matrix& a) {
    return power_matrix_symbolic(mat_inverse(a));
}

Matrix eval_closed_form_matrix(const ClosedFormMatrix& cfm, long long k) {
    Matrix out(cfm.dim);
    for (int i = 0; i < cfm.dim; ++i)
        for (int j = 0; j < cfm.dim; ++j)
            out.at(i, j) = eval_closed_form(cfm.entry(i, j), k);
    return out;
}

OracleReport check_against_oracle(const Matrix& a, long long kmax) {
    const ClosedFormMatrix cfm = power_matrix_symbolic(a);
    if (kmax < cfm.threshold)
        throw std::invalid_argument("kmax is below the validity threshold");

    OracleReport report;
    report.kmax = kmax;
    auto check_one = [&](long long k, const Matrix& reference) {
        bool ok = true;
        for (int i = 0; i < cfm.dim; ++i) {
            for (int j = 0; j < cfm.dim; ++j) {
                if (eval_closed_form(cfm.entry(i, j), k) == reference.at(i, j)) continue;
                ok = false;
                if (!report.first_failure) report.first_failure = OracleFailure{i, j, k};
            }
        }
        report.per_k.emplace_back(k, ok);
        if (!ok) report.pass = false;
    };

    if (cfm.invertible) {
        const Matrix inv = mat_inverse(a);
        for (long long k = -5; k <= -1; ++k) check_one(k, inv.pow(-k));
    }
    Matrix ref = a.pow(cfm.threshold);
    for (long long k = cfm.threshold; k <= kmax; ++k) {
        check_one(k, ref);
        ref = ref * a;
    }
    return report;
}

}  // namespace powmat
