#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace powmat {

// Exact arbitrary-precision fraction, the ground field of the whole
// library. Always kept reduced with a positive denominator; zero is 0/1.
// Equality is therefore structural (numerator and denominator match).
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    // Parses "p" or "p/q", each part with an optional sign. Throws
    // parse_error on anything else.
    static Rational from_string(const std::string& text);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational reciprocal() const;

    // Integer power; negative exponents invert (zero base rejected).
    Rational pow(long long e) const;

    // "p" when the denominator is 1, "p/q" otherwise.
    std::string to_string() const;
    double to_double() const { return v_.get_d(); }

  private:
    mpq_class v_;  // canonical: reduced, positive denominator
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Free-function form of the reducing constructor: unique representation
// with positive denominator. Zero denominator is an input error.
inline Rational rat_normalize(const mpz_class& num, const mpz_class& den) {
    return Rational(num, den);
}

}  // namespace powmat
