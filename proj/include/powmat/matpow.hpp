#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "powmat/cfsolve.hpp"
#include "powmat/matrix.hpp"

namespace powmat {

// Closed forms for every entry of A^k, all over one shared spectral
// basis. threshold is the guaranteed validity bound d; paper_threshold
// is the conservative bound n quoted in display output.
struct ClosedFormMatrix {
    int dim = 0;
    int threshold = 0;
    int paper_threshold = 0;
    bool invertible = false;
    SpectralBasis basis;
    Matrix source = Matrix(1);
    std::vector<ClosedFormSeq> entries;  // row-major dim x dim

    const ClosedFormSeq& entry(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) +
                       static_cast<std::size_t>(j)];
    }
};

// The symbolic power: characteristic polynomial, spectral basis, and a
// fitted closed form per entry (initial values taken from A^{d+1}..A^n,
// computed once). Invertible matrices get closed forms valid for every
// integer k; singular ones carry the threshold d.
ClosedFormMatrix power_matrix_symbolic(const Matrix& a);

// Exact A^k; k < 0 is computed through the exact inverse and raises
// singular_error when det = 0.
Matrix power_matrix_integer(const Matrix& a, long long k);

// Closed forms of A^{-k}: the symbolic power of the exact inverse.
ClosedFormMatrix power_matrix_inverse_symbolic(const Matrix& a);

// Every entry of the fitted closed form evaluated at one index.
Matrix eval_closed_form_matrix(const ClosedFormMatrix& cfm, long long k);

struct OracleFailure {
    int i = 0;
    int j = 0;
    long long k = 0;
};

struct OracleReport {
    long long kmax = 0;
    // Checked in ascending index order; negative indices appear only
    // for invertible matrices.
    std::vector<std::pair<long long, bool>> per_k;
    std::optional<OracleFailure> first_failure;
    bool pass = true;
};

// Compares closed-form evaluation against repeated-squaring powers for
// k = threshold..kmax, plus k = -5..-1 against inverse powers when the
// matrix is invertible. Equality is exact.
OracleReport check_against_oracle(const Matrix& a, long long kmax);

}  // namespace powmat
