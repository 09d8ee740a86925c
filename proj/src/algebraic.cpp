#include "powmat/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "powmat/errors.hpp"
#include "powmat/intfactor.hpp"

namespace powmat {

// ---------------------------------------------------------------------
// FactorHandle

FactorHandle FactorHandle::make(const Poly& f, std::string label) {
    if (f.degree() < 1)
        throw std::invalid_argument("modulus must have degree >= 1");
    Poly m = f.monic();
    if (m.constant_term().is_zero())
        throw std::invalid_argument("modulus must have a nonzero constant term");
    if (poly_gcd(m, m.derivative()).degree() != 0)
        throw std::invalid_argument("modulus must be squarefree");
    auto d = std::make_shared<Data>();
    d->modulus = m;
    d->label = std::move(label);
    d->psums = power_sums(m, m.degree() - 1);
    return FactorHandle(std::move(d));
}

const Poly& FactorHandle::modulus() const {
    if (!d_) throw internal_error("use of an empty factor handle");
    return d_->modulus;
}

const std::string& FactorHandle::label() const {
    if (!d_) throw internal_error("use of an empty factor handle");
    return d_->label;
}

int FactorHandle::degree() const { return modulus().degree(); }

const Rational& FactorHandle::power_sum(int e) const {
    if (!d_) throw internal_error("use of an empty factor handle");
    return d_->psums.at(static_cast<std::size_t>(e));
}

// ---------------------------------------------------------------------
// AlgValue

AlgValue::AlgValue(FactorHandle handle, const Poly& residue)
    : handle_(std::move(handle)) {
    if (!handle_.valid())
        throw std::invalid_argument("algebraic value needs a valid factor handle");
    residue_ = residue % handle_.modulus();
}

AlgValue AlgValue::constant(FactorHandle handle, const Rational& c) {
    return AlgValue(std::move(handle), Poly{c});
}

AlgValue AlgValue::root(FactorHandle handle) {
    return AlgValue(std::move(handle), Poly::monomial(1));
}

void AlgValue::require_same_handle(const AlgValue& o) const {
    if (!handle_.valid() || !o.handle_.valid() || handle_ != o.handle_)
        throw std::invalid_argument(
            "cross-extension arithmetic is unsupported: operands use different moduli");
}

Rational AlgValue::trace() const {
    if (!handle_.valid())
        throw std::invalid_argument("trace of a value without a factor handle");
    Rational t(0);
    for (int e = 0; e <= residue_.degree(); ++e)
        t += residue_.coeff(e) * handle_.power_sum(e);
    return t;
}

AlgValue AlgValue::operator+(const AlgValue& o) const {
    require_same_handle(o);
    return AlgValue(handle_, residue_ + o.residue_);
}

AlgValue AlgValue::operator-(const AlgValue& o) const {
    require_same_handle(o);
    return AlgValue(handle_, residue_ - o.residue_);
}

AlgValue AlgValue::operator*(const AlgValue& o) const {
    require_same_handle(o);
    return AlgValue(handle_, residue_ * o.residue_);
}

AlgValue AlgValue::operator*(const Rational& s) const {
    if (!handle_.valid())
        throw std::invalid_argument("scaling a value without a factor handle");
    return AlgValue(handle_, s * residue_);
}

AlgValue alg_arith(const AlgValue& a, const AlgValue& b, AlgOp op) {
    switch (op) {
        case AlgOp::add: return a + b;
        case AlgOp::sub: return a - b;
        case AlgOp::mul: return a * b;
    }
    throw internal_error("unknown algebraic operation");
}

Rational alg_trace(const AlgValue& a) { return a.trace(); }

// ---------------------------------------------------------------------
// SurdForm

double SurdForm::approx_real() const {
    if (disc >= 0) return u.to_double() + v.to_double() * std::sqrt(disc.get_d());
    return u.to_double();
}

double SurdForm::approx_imag() const {
    if (disc >= 0) return 0.0;
    return v.to_double() * std::sqrt(-disc.get_d());
}

SurdForm alg_to_surd(const AlgValue& a) {
    if (!a.handle().valid() || a.handle().degree() != 2)
        throw std::invalid_argument("surd form needs a quadratic modulus");
    const Poly& m = a.handle().modulus();
    const Rational b = m.coeff(1);
    const Rational c = m.coeff(0);
    const Rational e0 = a.residue().coeff(0);
    const Rational e1 = a.residue().coeff(1);

    SurdForm s;
    s.u = e0 - e1 * b / Rational(2);
    if (e1.is_zero()) {
        s.v = Rational(0);
        s.disc = 0;
        return s;
    }
    // Value at the "+sqrt" root: e0 + e1*(-b + sqrt(D))/2 with D = b^2 - 4c.
    // sqrt(P/Q) = (r/Q)*sqrt(part) where P*Q = r^2 * part, part squarefree.
    const Rational d = b * b - Rational(4) * c;
    const SquarefreeSplit split = squarefree_part(mpz_class(d.num() * d.den()));
    const Rational scale = Rational(split.root, d.den()) * e1 / Rational(2);
    if (split.part == 1) {
        s.u += scale;
        s.v = Rational(0);
        s.disc = 0;
        return s;
    }
    s.v = scale;
    s.disc = split.part;
    return s;
}

// ---------------------------------------------------------------------
// alg_approx: certified evaluation of a residue at one root.

namespace {

// Exact complex arithmetic over the rationals, used for Newton polishing.
struct QC {
    Rational re, im;

    QC operator+(const QC& o) const { return {re + o.re, im + o.im}; }
    QC operator-(const QC& o) const { return {re - o.re, im - o.im}; }
    QC operator*(const QC& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    QC operator/(const QC& o) const {
        const Rational n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

QC eval_qc(const Poly& f, const QC& z) {
    QC acc{Rational(0), Rational(0)};
    for (int i = f.degree(); i >= 0; --i)
        acc = acc * z + QC{f.coeff(i), Rational(0)};
    return acc;
}

// Round to the nearest multiple of 2^-bits; caps denominator growth so
// Newton iterates stay cheap while the grid error stays far below the
// requested precision.
Rational grid_round(const Rational& q, unsigned long bits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    // round(q * scale) = floor((2*num*scale + den) / (2*den))
    mpz_class twice_num = q.num() * scale * 2 + q.den();
    mpz_class twice_den = q.den() * 2;
    mpz_class rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), twice_num.get_mpz_t(), twice_den.get_mpz_t());
    return Rational(rounded, scale);
}

Rational rational_from_double(double x, unsigned long bits) {
    mpq_class q(x);
    return grid_round(Rational(mpz_class(q.get_num()), mpz_class(q.get_den())), bits);
}

std::vector<std::complex<double>> durand_kerner(const Poly& f) {
    const int m = f.degree();
    std::vector<std::complex<double>> z(m);
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> p(1.0, 0.0);
    for (int i = 0; i < m; ++i) {
        p *= seed;
        z[i] = p;
    }
    const Poly monic = f.monic();
    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < m; ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (int j = 0; j < m; ++j)
                if (j != i) denom *= z[i] - z[j];
            if (std::abs(denom) < 1e-300) {
                z[i] += std::complex<double>(1e-4, 1e-4);
                worst = 1.0;
                continue;
            }
            const std::complex<double> step = monic.eval(z[i]) / denom;
            z[i] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[i])));
        }
        if (worst < 1e-14) break;
    }
    std::sort(z.begin(), z.end(), [](const std::complex<double>& a,
                                     const std::complex<double>& b) {
        if (std::abs(a.real() - b.real()) > 1e-9) return a.real() < b.real();
        if (std::abs(a.imag() - b.imag()) > 1e-9) return a.imag() < b.imag();
        return false;
    });
    return z;
}

Rational abs_norm1(const QC& z) { return z.re.abs() + z.im.abs(); }

Rational abs_norminf(const QC& z) { return std::max(z.re.abs(), z.im.abs()); }

// Bound on |g'| over the disk of radius <= 1 around z, via the
// coefficient sum at U = |z|_1 + 1.
Rational lipschitz_bound(const Poly& g, const QC& z) {
    const Rational u = abs_norm1(z) + Rational(1);
    Rational bound(0);
    Rational upow(1);
    for (int j = 1; j <= g.degree(); ++j) {
        bound += Rational(j) * g.coeff(j).abs() * upow;
        upow *= u;
    }
    return bound;
}

AlgApprox point_enclosure(const QC& v) {
    AlgApprox out;
    out.real_lo = out.real_hi = v.re;
    out.imag_lo = out.imag_hi = v.im;
    out.exact = true;
    return out;
}

}  // namespace

double AlgApprox::real_mid() const {
    return ((real_lo + real_hi) / Rational(2)).to_double();
}

double AlgApprox::imag_mid() const {
    return ((imag_lo + imag_hi) / Rational(2)).to_double();
}

AlgApprox alg_approx(const AlgValue& a, int root_index, int digits) {
    if (!a.handle().valid())
        throw std::invalid_argument("approximation of a value without a factor handle");
    const Poly& f = a.handle().modulus();
    const Poly& g = a.residue();
    const int m = f.degree();
    if (root_index < 0 || root_index >= m)
        throw std::invalid_argument("root index out of range for the modulus degree");
    if (digits < 0) throw std::invalid_argument("precision must be nonnegative");

    // The value does not depend on the root when the residue is constant.
    if (g.degree() <= 0)
        return point_enclosure({g.coeff(0), Rational(0)});
    if (m == 1)
        return point_enclosure({g.eval(-f.coeff(0)), Rational(0)});

    const unsigned long bits = 4UL * static_cast<unsigned long>(digits) + 64UL;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const Rational half_width = Rational(1) / (Rational(2) * Rational(pow10));

    const std::vector<std::complex<double>> seeds = durand_kerner(f);
    const Poly fp = f.derivative();
    QC z{rational_from_double(seeds[root_index].real(), bits),
         rational_from_double(seeds[root_index].imag(), bits)};

    for (int iter = 0; iter < 64; ++iter) {
        const QC fz = eval_qc(f, z);
        if (fz.is_zero()) {
            // z is exactly a root; the residue value is exact too.
            return point_enclosure(eval_qc(g, z));
        }
        const QC fpz = eval_qc(fp, z);
        if (fpz.is_zero()) {
            z.re += Rational(1, 1024);
            continue;
        }
        // Distance from z to the nearest root of f is at most
        // m*|f(z)/f'(z)|; bound it with rational norms.
        const Rational dist = Rational(m) * abs_norm1(fz) / abs_norminf(fpz);
        if (dist <= Rational(1)) {
            const Rational lip = lipschitz_bound(g, z);
            const Rational err = dist * lip;
            if (err <= half_width) {
                const QC v = eval_qc(g, z);
                AlgApprox out;
                out.real_lo = v.re - err;
                out.real_hi = v.re + err;
                out.imag_lo = v.im - err;
                out.imag_hi = v.im + err;
                out.exact = false;
                return out;
            }
        }
        const QC step = fz / fpz;
        z.re = grid_round(z.re - step.re, bits);
        z.im = grid_round(z.im - step.im, bits);
    }
    throw internal_error("root refinement did not converge");
}

}  // namespace powmat
