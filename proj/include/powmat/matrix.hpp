#pragma once

#include <iosfwd>
#include <vector>

#include "powmat/poly.hpp"
#include "powmat/rational.hpp"

namespace powmat {

// Dense square matrix over the rationals, row-major.
class Matrix {
  public:
    explicit Matrix(int dim);  // zero matrix
    Matrix(int dim, std::vector<Rational> entries_row_major);

    static Matrix identity(int dim);

    int dim() const { return n_; }
    const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    Rational trace() const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    // Exact A^e by repeated squaring; A^0 is the identity.
    Matrix pow(long long e) const;

  private:
    int n_;
    std::vector<Rational> e_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

inline Matrix mat_pow(const Matrix& a, long long e) { return a.pow(e); }

struct CharPolyResult {
    Poly charpoly;      // det(xI - A), monic of degree n
    Rational determinant;
    Matrix adjugate;    // A * adjugate = determinant * I
};

// One Faddeev-LeVerrier pass yields all three outputs exactly; the only
// divisions are by the integers 1..n.
CharPolyResult faddeev_leverrier(const Matrix& a);

// Exact inverse (adjugate over determinant); singular_error when det = 0.
Matrix mat_inverse(const Matrix& a);

}  // namespace powmat
