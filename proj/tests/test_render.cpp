#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "expr_eval.hpp"
#include "powmat/errors.hpp"
#include "powmat/matpow.hpp"
#include "powmat/matrix_io.hpp"
#include "powmat/render.hpp"

using powmat::ClosedFormMatrix;
using powmat::Matrix;
using powmat::Poly;
using powmat::Rational;
using powmat::RenderFormat;
using powmat::RenderStyle;

namespace {

Matrix from_ints(int dim, std::vector<long> vals) {
    std::vector<Rational> e;
    e.reserve(vals.size());
    for (long v : vals) e.emplace_back(v);
    return Matrix(dim, std::move(e));
}

const Matrix kA1 = from_ints(3, {4, -2, 2, -5, 7, -5, -6, 6, -4});
const Matrix kA4 = from_ints(5, {0, 0, 1, 0, 1,
                                 1, 0, 0, 0, 1,
                                 0, 0, 0, 1, 1,
                                 0, 1, 0, 0, 1,
                                 1, 1, 1, 1, 0});
const Matrix kA5 = from_ints(4, {0, 2, 1, 3, 0, 0, -2, 4, 0, 0, 0, 5, 0, 0, 0, 0});
const Matrix kA6 = from_ints(4, {1, 1, 1, 0, 1, 1, 1, -1, 0, 0, -1, 1, 0, 0, 1, -1});
// Companion matrix of x^3 - x - 1: an irreducible cubic spectrum.
const Matrix kC3 = from_ints(3, {0, 0, 1, 1, 0, 1, 0, 1, 0});

std::string strip_spaces(std::string s) {
    std::string out;
    for (char c : s)
        if (c != ' ') out += c;
    return out;
}

const RenderStyle kPlain{RenderFormat::plain, "k"};

}  // namespace

TEST_CASE("pinned plain forms for the rational-eigenvalue examples") {
    const ClosedFormMatrix cf1 = powmat::power_matrix_symbolic(kA1);
    CHECK(render_entry(cf1.entry(0, 0), kPlain) == "-2^k + 2*3^k");

    const ClosedFormMatrix cf6 = powmat::power_matrix_symbolic(kA6);
    // Normalized comparison: spacing around '*' is not significant.
    CHECK(strip_spaces(render_entry(cf6.entry(2, 2), kPlain)) ==
          strip_spaces("(-1)^k * 2^(k-1)"));
    CHECK(render_entry(cf6.entry(0, 0), kPlain) == "2^(k-1)");
}

TEST_CASE("zero closed form renders as 0 with the validity message") {
    const ClosedFormMatrix cf5 = powmat::power_matrix_symbolic(kA5);
    const std::string text = render_closed_form(cf5, kPlain);
    CHECK(text.find("valid for k >= 4 (paper bound 4)") == 0);
    CHECK(text.find("[1,1] 0\n") != std::string::npos);
    CHECK(text.find("[4,4] 0\n") != std::string::npos);
    CHECK(render_entry(cf5.entry(0, 0), kPlain) == "0");

    // Invertible sources carry no validity banner.
    const std::string inv = render_closed_form(powmat::power_matrix_symbolic(kA1), kPlain);
    CHECK(inv.find("valid for") == std::string::npos);
    CHECK(inv.find("[1,1] ") == 0);
}

TEST_CASE("surd rendering spells out both conjugate branches") {
    const ClosedFormMatrix cf4 = powmat::power_matrix_symbolic(kA4);
    const std::string corner = render_entry(cf4.entry(0, 4), kPlain);
    CHECK(strip_spaces(corner) ==
          strip_spaces("sqrt(17)/17*(1/2 + sqrt(17)/2)^k - sqrt(17)/17*(1/2 - sqrt(17)/2)^k"));
}

TEST_CASE("irreducible cubics render as sums over the modulus roots") {
    const ClosedFormMatrix cf = powmat::power_matrix_symbolic(kC3);
    const std::string top = render_entry(cf.entry(0, 0), kPlain);
    CHECK(top.find("Sum(") != std::string::npos);
    CHECK(top.find("RootOf(") != std::string::npos);
    CHECK(top.find("_Z^3 - _Z - 1") != std::string::npos);
    CHECK(top.find("_R^k") != std::string::npos);
}

TEST_CASE("rendered expressions re-evaluate to the exact powers") {
    for (const Matrix* m : {&kA1, &kA4, &kA6, &kC3}) {
        const ClosedFormMatrix cf = powmat::power_matrix_symbolic(*m);
        for (long long k = cf.threshold; k <= cf.threshold + 5; ++k) {
            const Matrix exact = powmat::mat_pow(*m, k);
            for (int i = 0; i < cf.dim; ++i)
                for (int j = 0; j < cf.dim; ++j) {
                    const std::string text = render_entry(cf.entry(i, j), kPlain);
                    const auto numeric = testhelp::expr_eval_complex(text, "k", k);
                    CHECK(std::abs(numeric.real() - exact.at(i, j).to_double()) < 1e-9);
                    CHECK(std::abs(numeric.imag()) < 1e-9);
                    try {
                        const Rational v = testhelp::expr_eval_rational(text, "k", k);
                        CHECK(v == exact.at(i, j));
                    } catch (const testhelp::irrational_expr&) {
                        // surd and root-sum entries have no exact route
                    }
                }
        }
    }
}

TEST_CASE("rational-eigenvalue entries re-evaluate exactly") {
    const ClosedFormMatrix cf = powmat::power_matrix_symbolic(kA1);
    for (long long k = 0; k <= 6; ++k) {
        const Matrix exact = powmat::mat_pow(kA1, k);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(testhelp::expr_eval_rational(render_entry(cf.entry(i, j), kPlain),
                                                   "k", k) == exact.at(i, j));
    }
}

TEST_CASE("json closed form re-parses and re-evaluates exactly") {
    for (const Matrix* m : {&kA1, &kA4, &kA6, &kC3, &kA5}) {
        const ClosedFormMatrix cf = powmat::power_matrix_symbolic(*m);
        const auto doc =
            nlohmann::json::parse(render_closed_form(cf, {RenderFormat::json, "k"}));

        CHECK(doc["dim"] == cf.dim);
        CHECK(doc["threshold"] == cf.threshold);
        CHECK(doc["paper_threshold"] == cf.paper_threshold);
        CHECK(doc["invertible"] == cf.invertible);

        for (int i = 0; i < cf.dim; ++i)
            for (int j = 0; j < cf.dim; ++j) {
                powmat::ClosedFormSeq rebuilt;
                rebuilt.threshold = doc["threshold"].get<int>();
                rebuilt.valid_all_k = doc["invertible"].get<bool>();
                for (const auto& term : doc["entries"][i][j]) {
                    std::vector<Rational> mc;
                    for (const auto& c : term["modulus"])
                        mc.push_back(Rational::from_string(c.get<std::string>()));
                    const auto handle = powmat::FactorHandle::make(Poly(std::move(mc)));
                    std::vector<Rational> rc;
                    for (const auto& c : term["coeff"])
                        rc.push_back(Rational::from_string(c.get<std::string>()));
                    rebuilt.terms.push_back(powmat::ClosedFormTerm{
                        handle, term["kpow"].get<int>(),
                        powmat::AlgValue(handle, Poly(std::move(rc)))});
                }
                for (long long k = cf.threshold; k <= cf.threshold + 8; ++k)
                    CHECK(powmat::eval_closed_form(rebuilt, k) ==
                          powmat::mat_pow(*m, k).at(i, j));
            }
    }
}

TEST_CASE("rendering is deterministic across recomputations") {
    for (const auto format : {RenderFormat::plain, RenderFormat::latex, RenderFormat::json}) {
        const RenderStyle style{format, "k"};
        const std::string a =
            render_closed_form(powmat::power_matrix_symbolic(kA4), style);
        const std::string b =
            render_closed_form(powmat::power_matrix_symbolic(kA4), style);
        CHECK(a == b);
    }
}

TEST_CASE("latex output uses the expected markup") {
    const ClosedFormMatrix cf4 = powmat::power_matrix_symbolic(kA4);
    const std::string tex = render_closed_form(cf4, {RenderFormat::latex, "k"});
    CHECK(tex.find("\\sqrt{17}") != std::string::npos);
    CHECK(tex.find("\\begin{array}") != std::string::npos);

    const std::string cubic =
        render_closed_form(powmat::power_matrix_symbolic(kC3), {RenderFormat::latex, "k"});
    CHECK(cubic.find("\\sum_{_R") != std::string::npos);

    const std::string tex5 =
        render_closed_form(powmat::power_matrix_symbolic(kA5), {RenderFormat::latex, "k"});
    CHECK(tex5.find("% valid for k >= 4 (paper bound 4)") == 0);

    CHECK(render_rational(Rational(-1, 2), RenderFormat::latex) == "-\\frac{1}{2}");
    CHECK(render_poly(Poly{Rational(-4), Rational(-1), Rational(1)}, "x",
                      RenderFormat::latex) == "x^{2} - x - 4");
}

TEST_CASE("alternate index symbols flow through every format") {
    const ClosedFormMatrix cf = powmat::power_matrix_symbolic(kA1);
    CHECK(render_entry(cf.entry(0, 0), {RenderFormat::plain, "n"}) == "-2^n + 2*3^n");
    const std::string tex = render_entry(cf.entry(0, 0), {RenderFormat::latex, "n"});
    CHECK(tex.find("3^{n}") != std::string::npos);
}

TEST_CASE("matrix rendering round-trips through the input parser") {
    const Matrix b = mat_inverse(kA1);
    CHECK(powmat::parse_matrix_input(render_matrix(b, RenderFormat::json)) == b);
    CHECK(powmat::parse_matrix_input(render_matrix(b, RenderFormat::plain)) == b);
    CHECK(render_matrix(from_ints(2, {1, -2, 3, 4}), RenderFormat::plain) == "1 -2\n3 4\n");
}

TEST_CASE("matrix input accepts json and plain rows") {
    CHECK(powmat::parse_matrix_input(
              "{\"entries\":[[4,-2,2],[-5,7,-5],[-6,6,-4]]}") == kA1);

    const Matrix b = powmat::parse_matrix_input("1/6 1/3 -1/3\n5/6 -1/3 5/6\n1 -1 3/2\n");
    CHECK(b == mat_inverse(kA1));

    CHECK(powmat::parse_matrix_input("{\"entries\":[[\"1/2\",\"-3\"],[\"0\",\"7\"]]}") ==
          Matrix(2, {Rational(1, 2), Rational(-3), Rational(0), Rational(7)}));
}

TEST_CASE("matrix input rejects malformed content with typed errors") {
    CHECK_THROWS_AS(powmat::parse_matrix_input("{\"entries\":[[1,2],[3]]}"),
                    powmat::dimension_error);
    CHECK_THROWS_AS(powmat::parse_matrix_input("1 2 3\n4 5 6\n"), powmat::dimension_error);
    CHECK_THROWS_AS(powmat::parse_matrix_input(""), powmat::dimension_error);
    CHECK_THROWS_AS(powmat::parse_matrix_input("{\"entries\":[]}"), powmat::dimension_error);

    CHECK_THROWS_AS(powmat::parse_matrix_input("1 2\n3 4x\n"), powmat::parse_error);
    CHECK_THROWS_AS(powmat::parse_matrix_input("{\"entries\":[[1.5]]}"), powmat::parse_error);
    CHECK_THROWS_AS(powmat::parse_matrix_input("{\"entries\":[[true]]}"), powmat::parse_error);
    CHECK_THROWS_AS(powmat::parse_matrix_input("{\"rows\":[[1]]}"), powmat::parse_error);
    CHECK_THROWS_AS(powmat::parse_matrix_input("{\"entries\": 5}"), powmat::parse_error);
    CHECK_THROWS_AS(powmat::parse_matrix_input("{not json"), powmat::parse_error);
}
