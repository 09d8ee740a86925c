#include "powmat/matrix.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "powmat/errors.hpp"

namespace powmat {

Matrix::Matrix(int dim) : n_(dim) {
    if (dim <= 0) throw std::invalid_argument("matrix dimension must be positive");
    e_.assign(static_cast<std::size_t>(dim) * dim, Rational(0));
}

Matrix::Matrix(int dim, std::vector<Rational> entries_row_major) : n_(dim), e_(std::move(entries_row_major)) {
    if (dim <= 0) throw std::invalid_argument("matrix dimension must be positive");
    if (e_.size() != static_cast<std::size_t>(dim) * dim)
        throw std::invalid_argument("entry count does not match dimension");
}

Matrix Matrix::identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = Rational(1);
    return m;
}

Rational Matrix::trace() const {
    Rational t(0);
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const Rational& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix r(a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int k = 0; k < a.n_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < a.n_; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
}

Matrix operator*(const Rational& s, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.e_) x *= s;
    return r;
}

Matrix Matrix::pow(long long e) const {
    if (e < 0) throw std::invalid_argument("Matrix::pow needs a nonnegative exponent");
    Matrix result = identity(n_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        if (e >>= 1) base = base * base;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) os << (j ? " " : "") << m.at(i, j);
        os << "\n";
    }
    return os;
}

CharPolyResult faddeev_leverrier(const Matrix& a) {
    const int n = a.dim();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = Rational(1);
    Matrix m(n);   // M_k
    Matrix am(n);  // A * M_k
    for (int k = 1; k <= n; ++k) {
        // M_k = A*M_{k-1} + c_{n-k+1} I
        m = std::move(am);
        for (int i = 0; i < n; ++i) m.at(i, i) += c[n - k + 1];
        am = a * m;
        c[n - k] = -am.trace() / Rational(k);
    }
    Rational det = (n % 2 == 0) ? c[0] : -c[0];
    Matrix adj = (n % 2 == 1) ? m : -Rational(1) * m;
    return CharPolyResult{Poly(std::move(c)), std::move(det), std::move(adj)};
}

Matrix mat_inverse(const Matrix& a) {
    CharPolyResult cp = faddeev_leverrier(a);
    if (cp.determinant.is_zero())
        throw singular_error("matrix is singular: determinant is 0");
    return cp.determinant.reciprocal() * cp.adjugate;
}

}  // namespace powmat
