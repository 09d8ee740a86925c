#include "powmat/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "powmat/errors.hpp"

namespace powmat {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    auto bad = [&] { return parse_error("not a rational: '" + text + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    const std::string num_part = text.substr(0, slash);
    auto is_int = [](const std::string& s) {
        std::size_t i = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    // mpz_class rejects a leading '+', so strip it after validation.
    auto strip_plus = [](const std::string& s) { return s[0] == '+' ? s.substr(1) : s; };
    if (!is_int(num_part)) throw bad();
    mpz_class num(strip_plus(num_part));
    if (slash == std::string::npos) return Rational(num);
    const std::string den_part = text.substr(slash + 1);
    if (!is_int(den_part)) throw bad();
    mpz_class den(strip_plus(den_part));
    if (sgn(den) == 0) throw parse_error("zero denominator: '" + text + "'");
    return Rational(num, den);
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::invalid_argument("reciprocal of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::pow(long long e) const {
    if (e < 0) return reciprocal().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

std::string Rational::to_string() const {
    std::string s = num().get_str();
    if (!is_integer()) s += "/" + den().get_str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace powmat
