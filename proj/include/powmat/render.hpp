#pragma once

#include <string>

#include "powmat/matpow.hpp"
#include "powmat/matrix.hpp"
#include "powmat/poly.hpp"
#include "powmat/rational.hpp"

namespace powmat {

enum class RenderFormat { plain, latex, json };

struct RenderStyle {
    RenderFormat format = RenderFormat::plain;
    std::string index_symbol = "k";
};

std::string render_rational(const Rational& r, RenderFormat format);
std::string render_poly(const Poly& p, const std::string& var, RenderFormat format);
std::string render_matrix(const Matrix& m, RenderFormat format);

// One entry's closed form as an expression in the index symbol. Degree-1
// blocks become c*r^k (with (-1)^k pulled out of negative bases and
// rational coefficients folded into the exponent when they are powers of
// the base), degree-2 blocks become explicit two-branch surd expressions,
// higher degrees become sums over the roots of the printed modulus.
std::string render_entry(const ClosedFormSeq& seq, const RenderStyle& style);

// The whole matrix of closed forms; singular sources are prefixed with
// the validity message quoting both thresholds. The json format follows
// the documented term-AST schema.
std::string render_closed_form(const ClosedFormMatrix& cfm, const RenderStyle& style);

}  // namespace powmat
