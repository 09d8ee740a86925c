#pragma once

#include <memory>
#include <string>
#include <vector>

#include "powmat/poly.hpp"
#include "powmat/rational.hpp"

namespace powmat {

// A shared, immutable description of one quotient ring Q[x]/(f).
// f is monic, squarefree, of degree >= 1, with nonzero constant term
// (zero roots never enter the spectral basis; they are stripped as a
// power of x beforehand). Power sums of the roots are precomputed up
// to degree-1 so traces of reduced residues are a dot product.
class FactorHandle {
  public:
    FactorHandle() = default;

    // Normalizes f to monic form, validates the invariants above.
    // Throws std::invalid_argument on a constant, non-squarefree,
    // or zero-constant-term modulus.
    static FactorHandle make(const Poly& f, std::string label = "_R");

    bool valid() const { return static_cast<bool>(d_); }
    const Poly& modulus() const;
    const std::string& label() const;
    int degree() const;
    // p_e = sum of theta^e over all complex roots theta, e = 0..degree-1.
    const Rational& power_sum(int e) const;

    // Identity, not structural equality: two handles compare equal only
    // if they were created by the same make() call. Values over distinct
    // handles never mix.
    friend bool operator==(const FactorHandle& a, const FactorHandle& b) {
        return a.d_ == b.d_;
    }
    friend bool operator!=(const FactorHandle& a, const FactorHandle& b) {
        return a.d_ != b.d_;
    }

  private:
    struct Data {
        Poly modulus;
        std::string label;
        std::vector<Rational> psums;
    };
    explicit FactorHandle(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

enum class AlgOp { add, sub, mul };

// An element of Q[x]/(modulus): the residue is kept reduced below the
// modulus degree at all times.
class AlgValue {
  public:
    AlgValue() = default;
    AlgValue(FactorHandle handle, const Poly& residue);

    static AlgValue constant(FactorHandle handle, const Rational& c);
    // The class of x itself, i.e. the formal root theta.
    static AlgValue root(FactorHandle handle);

    const FactorHandle& handle() const { return handle_; }
    const Poly& residue() const { return residue_; }
    bool is_zero() const { return residue_.is_zero(); }

    // Sum of the residue polynomial evaluated at every complex root of
    // the modulus; always rational.
    Rational trace() const;

    AlgValue operator+(const AlgValue& o) const;
    AlgValue operator-(const AlgValue& o) const;
    AlgValue operator*(const AlgValue& o) const;
    AlgValue operator*(const Rational& s) const;

    friend bool operator==(const AlgValue& a, const AlgValue& b) {
        return a.handle_ == b.handle_ && a.residue_ == b.residue_;
    }
    friend bool operator!=(const AlgValue& a, const AlgValue& b) {
        return !(a == b);
    }

  private:
    void require_same_handle(const AlgValue& o) const;
    FactorHandle handle_;
    Poly residue_;
};

AlgValue alg_arith(const AlgValue& a, const AlgValue& b, AlgOp op);
Rational alg_trace(const AlgValue& a);

// u + v*sqrt(disc) with disc a squarefree integer (negative for complex
// values). v == 0 means the value is plain rational; disc is then 0.
struct SurdForm {
    Rational u;
    Rational v;
    mpz_class disc;

    bool is_rational() const { return v.is_zero(); }
    // Display aid: real part only makes sense for disc >= 0.
    double approx_real() const;
    double approx_imag() const;
};

// Evaluates a value over a quadratic modulus at the "+sqrt" root
// (-b + sqrt(b^2-4c))/2 of x^2+bx+c and normalizes to u + v*sqrt(disc).
// Throws std::invalid_argument unless the modulus degree is 2.
SurdForm alg_to_surd(const AlgValue& a);

// Certified enclosure of the residue evaluated at one chosen root of
// the modulus. Bounds are exact rationals; width <= 10^-digits in each
// coordinate. exact is set when the enclosure is a point.
struct AlgApprox {
    Rational real_lo, real_hi;
    Rational imag_lo, imag_hi;
    bool exact = false;

    double real_mid() const;
    double imag_mid() const;
};

// root_index selects among the modulus roots ordered by (real part,
// imaginary part) of their numeric approximations.
AlgApprox alg_approx(const AlgValue& a, int root_index, int digits);

}  // namespace powmat
