#include "powmat/poly.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "powmat/errors.hpp"
#include "powmat/intfactor.hpp"

namespace powmat {

namespace {
const Rational kZero = Rational(0);
}  // namespace

Poly::Poly(const Rational& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

Poly::Poly(std::initializer_list<Rational> coeffs_low_first) : c_(coeffs_low_first) {
    trim();
}

Poly::Poly(std::vector<Rational> coeffs_low_first) : c_(std::move(coeffs_low_first)) {
    trim();
}

Poly Poly::monomial(int degree, const Rational& coeff) {
    Poly p;
    if (!coeff.is_zero()) {
        p.c_.assign(degree + 1, Rational(0));
        p.c_.back() = coeff;
    }
    return p;
}

Poly Poly::linear_root(const Rational& root) {
    return Poly{-root, Rational(1)};
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Poly::low_degree() const {
    if (is_zero()) throw std::invalid_argument("low_degree of the zero polynomial");
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    throw internal_error("untrimmed zero polynomial");
}

const Rational& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const Rational& Poly::leading() const {
    if (is_zero()) throw std::invalid_argument("leading coefficient of the zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

Poly operator*(const Rational& s, const Poly& p) {
    if (s.is_zero()) return Poly();
    Poly r = p;
    for (auto& x : r.c_) x *= s;
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& g) const {
    if (g.is_zero()) throw std::invalid_argument("polynomial division by zero");
    Poly q, r = *this;
    const int dg = g.degree();
    if (degree() >= dg) q.c_.assign(degree() - dg + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= dg) {
        const Rational factor = r.leading() / g.leading();
        const int shift = r.degree() - dg;
        q.c_[shift] = factor;
        for (int i = 0; i <= dg; ++i) r.c_[shift + i] -= factor * g.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::derivative() const {
    Poly r;
    for (int i = 1; i <= degree(); ++i) r.c_.push_back(Rational(i) * c_[i]);
    r.trim();
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) throw std::invalid_argument("monic normalization of the zero polynomial");
    return leading().reciprocal() * *this;
}

Poly Poly::shift_up(int d) const {
    if (is_zero()) return Poly();
    Poly r;
    r.c_.assign(c_.size() + d, Rational(0));
    std::copy(c_.begin(), c_.end(), r.c_.begin() + d);
    return r;
}

Poly Poly::shift_down(int d) const {
    for (int i = 0; i < d && i < static_cast<int>(c_.size()); ++i)
        if (!c_[i].is_zero()) throw std::invalid_argument("shift_down would drop nonzero terms");
    Poly r;
    if (static_cast<int>(c_.size()) > d) r.c_.assign(c_.begin() + d, c_.end());
    return r;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> Poly::eval(const std::complex<double>& x) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

Poly Poly::pow_mod_x(long long k) const {
    if (degree() < 1) throw std::invalid_argument("pow_mod_x needs a modulus of degree >= 1");
    if (k < 0) throw std::invalid_argument("pow_mod_x needs a nonnegative exponent");
    Poly result{Rational(1)};
    Poly base = Poly::monomial(1) % *this;
    while (k > 0) {
        if (k & 1) result = (result * base) % *this;
        base = (base * base) % *this;
        k >>= 1;
    }
    return result;
}

Poly Poly::x_inverse_mod() const {
    if (degree() < 1 || constant_term().is_zero())
        throw std::invalid_argument("x is not invertible modulo this polynomial");
    // x * h = f - c0 = -c0 (mod f), so x^-1 = -h/c0 with h = (f - c0)/x.
    const Rational scale = -constant_term().reciprocal();
    Poly h;
    h.c_.assign(c_.begin() + 1, c_.end());
    return scale * h;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& a = c_[i];
        if (a.is_zero()) continue;
        const Rational mag = a.abs();
        if (first) {
            if (a.sign() < 0) os << "-";
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        const bool unit = (mag == Rational(1));
        if (i == 0) {
            os << mag.to_string();
        } else {
            if (!unit) os << mag.to_string() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.to_string();
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        // Normalizing each remainder keeps coefficient growth in check.
        b = r.is_zero() ? Poly() : r.monic();
    }
    return a.monic();
}

bool poly_order_before(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) > b.coeff(i);
    return false;
}

std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    const Poly fm = f.monic();
    std::vector<std::pair<Poly, int>> out;
    if (fm.is_constant()) return out;

    // Yun's gcd chain with the derivative.
    Poly g = poly_gcd(fm, fm.derivative());
    Poly b = fm / g;
    Poly c = fm.derivative() / g;
    Poly d = c - b.derivative();
    int mult = 1;
    while (b.degree() > 0) {
        Poly a = poly_gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, mult);
        b = b / a;
        c = d / a;
        d = c - b.derivative();
        ++mult;
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return poly_order_before(x.first, y.first); });
    return out;
}

std::pair<std::vector<Rational>, Poly> extract_rational_roots(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("root extraction from zero");
    std::vector<Rational> roots;
    Poly rem = f.monic();

    if (rem.degree() >= 1 && rem.constant_term().is_zero()) {
        roots.push_back(Rational(0));
        rem = rem.shift_down(1);  // squarefree, so x divides at most once
    }
    if (rem.degree() >= 1) {
        // Scale to an integer polynomial to enumerate candidates p/q with
        // p | constant and q | leading coefficient.
        mpz_class denom_lcm = 1;
        for (const Rational& a : rem.coeffs())
            mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), a.den().get_mpz_t());
        std::vector<mpz_class> zc;
        zc.reserve(rem.coeffs().size());
        for (const Rational& a : rem.coeffs()) zc.push_back(mpz_class(a.num() * (denom_lcm / a.den())));
        mpz_class content = 0;
        for (const mpz_class& z : zc) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
        for (mpz_class& z : zc) z /= content;

        std::set<Rational> candidates;
        for (const mpz_class& p : divisors(zc.front()))
            for (const mpz_class& q : divisors(zc.back())) {
                candidates.insert(Rational(p, q));
                candidates.insert(Rational(-p, q));
            }
        for (const Rational& cand : candidates) {
            if (rem.degree() < 1) break;
            if (rem.eval(cand).is_zero()) {
                roots.push_back(cand);
                rem = rem / Poly::linear_root(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return {roots, rem};
}

std::vector<Rational> power_sums(const Poly& f, int upto) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("power sums need a monic polynomial of degree >= 1");
    const int m = f.degree();
    std::vector<Rational> p;
    p.reserve(upto + 1);
    p.push_back(Rational(m));
    for (int j = 1; j <= upto; ++j) {
        // Newton: p_j = -j a_{m-j} - sum_{i=1}^{j-1} a_{m-i} p_{j-i}
        Rational pj = (j <= m) ? Rational(-j) * f.coeff(m - j) : Rational(0);
        for (int i = 1; i < j && i <= m; ++i) pj -= f.coeff(m - i) * p[j - i];
        p.push_back(pj);
    }
    return p;
}

}  // namespace powmat
