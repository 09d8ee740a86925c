#pragma once

#include <string>
#include <vector>

#include "powmat/algebraic.hpp"
#include "powmat/poly.hpp"
#include "powmat/rational.hpp"

namespace powmat {

// One pairwise-coprime squarefree factor of the recurrence polynomial
// together with its multiplicity.
struct SpectralBlock {
    FactorHandle handle;
    int multiplicity = 1;
};

// The nonzero spectrum of a monic polynomial P = x^d * (coprime squarefree
// blocks raised to multiplicities). The recurrence a sequence inherits from
// P has order = deg P - d; its solutions are spanned by k^t * theta^k with
// theta a block root and t below the block multiplicity.
struct SpectralBasis {
    int low_degree = 0;
    std::vector<SpectralBlock> blocks;

    int order() const;
};

// Display order of block moduli: lower degree first, then coefficients
// compared from the constant term upward, larger first (ascending roots
// for monic linear blocks).
bool block_order_before(const Poly& a, const Poly& b);

// Sorts the given (modulus, multiplicity) pairs into display order,
// assigns root-symbol labels _R, _R1, ... to the degree >= 2 moduli, and
// wraps them in handles.
SpectralBasis assemble_basis(int low_degree, std::vector<std::pair<Poly, int>> blocks);

// Strips x^d, squarefree-decomposes the rest, pulls rational roots out
// into their own degree-1 blocks, and keeps the root-free remainders as
// higher-degree blocks.
SpectralBasis build_spectral_basis(const Poly& p);

// Window of known values a(d+1) .. a(d+order) that pins down the sequence.
struct InitialConditions {
    int start_index = 1;
    std::vector<Rational> values;
};

struct ClosedFormTerm {
    FactorHandle handle;
    int kpower = 0;
    AlgValue coeff;
};

// a(k) = sum over terms of trace(coeff * theta^k) * k^kpower, valid for
// every integer k >= threshold (and for all integers when valid_all_k is
// set, which matpow does for invertible matrices).
struct ClosedFormSeq {
    int threshold = 0;
    bool valid_all_k = false;
    std::vector<ClosedFormTerm> terms;
    std::string index_symbol = "k";
};

// Fits closed forms over one spectral basis. The fitting system depends
// only on the basis, so its inverse is computed once and reused across
// solves (one per matrix entry).
class RecurrenceFitter {
  public:
    explicit RecurrenceFitter(SpectralBasis basis);

    const SpectralBasis& basis() const { return basis_; }

    // init.start_index must be low_degree + 1 and init.values must have
    // exactly order() entries. The returned threshold is low_degree.
    ClosedFormSeq solve(const InitialConditions& init) const;

  private:
    SpectralBasis basis_;
    // Inverse of the order x order trace system; rows/columns indexed by
    // (block, kpower, residue coordinate) in basis order.
    std::vector<std::vector<Rational>> inv_;
};

ClosedFormSeq solve_cfinite(const SpectralBasis& basis, const InitialConditions& init);

// Exact evaluation. k below the threshold needs valid_all_k, otherwise a
// singular_error is raised; negative k uses the inverse of x modulo each
// block (the blocks never have zero constant terms).
Rational eval_closed_form(const ClosedFormSeq& cf, long long k);

}  // namespace powmat
