#pragma once

#include <complex>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "powmat/rational.hpp"

namespace powmat {

// Dense univariate polynomial over the rationals, coefficients stored
// lowest degree first. The zero polynomial is the empty coefficient
// vector; otherwise the leading coefficient is nonzero.
class Poly {
  public:
    Poly() = default;
    Poly(const Rational& constant);
    Poly(std::initializer_list<Rational> coeffs_low_first);
    explicit Poly(std::vector<Rational> coeffs_low_first);

    static Poly monomial(int degree, const Rational& coeff = Rational(1));
    static Poly linear_root(const Rational& root);  // x - root

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    // Index of the lowest nonzero coefficient; input error on zero.
    int low_degree() const;
    bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }
    bool is_constant() const { return c_.size() <= 1; }

    // Zero beyond the stored range.
    const Rational& coeff(int i) const;
    const Rational& leading() const;
    const Rational& constant_term() const { return coeff(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // f = q*g + r with deg r < deg g, exact; g must be nonzero.
    std::pair<Poly, Poly> divrem(const Poly& g) const;
    Poly operator/(const Poly& g) const { return divrem(g).first; }
    Poly operator%(const Poly& g) const { return divrem(g).second; }

    Poly derivative() const;
    Poly monic() const;  // divide by the leading coefficient
    Poly shift_up(int d) const;    // multiply by x^d
    Poly shift_down(int d) const;  // divide by x^d; lower coefficients must be zero

    Rational eval(const Rational& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

    // x^k mod f for k >= 0, by binary exponentiation (f = *this, degree >= 1).
    Poly pow_mod_x(long long k) const;
    // Inverse of x in Q[x]/(f); requires a nonzero constant term.
    Poly x_inverse_mod() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    std::vector<Rational> c_;
    void trim();
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

// Monic gcd; (f, 0) -> monic scaling of f; both zero is an input error.
Poly poly_gcd(const Poly& f, const Poly& g);

// Deterministic display order: degree ascending, then coefficients
// compared from the constant term upward with the larger one first
// (ascending roots for monic linear factors).
bool poly_order_before(const Poly& a, const Poly& b);

// Yun's algorithm. Returns pairwise-coprime monic squarefree factors with
// multiplicities whose product reconstructs f (normalized monic first),
// sorted by poly_order_before. Constant input yields the empty list.
std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& f);

// Rational-root theorem on the integer-scaled polynomial, each candidate
// verified by exact evaluation. Input must be squarefree and monic.
// Returns the roots in ascending order plus f with those linear factors
// divided out (the remainder has no rational roots).
std::pair<std::vector<Rational>, Poly> extract_rational_roots(const Poly& f);

// x^k reduced modulo monic f, degree(f) >= 1.
inline Poly poly_powmod(long long k, const Poly& f) { return f.pow_mod_x(k); }

// p_0..p_upto with p_j the sum of the j-th powers of the roots of monic f,
// via Newton's identities; p_0 = deg f.
std::vector<Rational> power_sums(const Poly& f, int upto);

}  // namespace powmat
