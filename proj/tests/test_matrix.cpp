#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "oracle_helpers.hpp"
#include "powmat/errors.hpp"
#include "powmat/matrix.hpp"

using powmat::Matrix;
using powmat::Poly;
using powmat::Rational;

namespace {

Matrix from_ints(int dim, std::vector<long> vals) {
    std::vector<Rational> e;
    e.reserve(vals.size());
    for (long v : vals) e.emplace_back(v);
    return Matrix(dim, std::move(e));
}

const Matrix kA1 = from_ints(3, {4, -2, 2, -5, 7, -5, -6, 6, -4});
const Matrix kA5 = from_ints(4, {0, 2, 1, 3, 0, 0, -2, 4, 0, 0, 0, 5, 0, 0, 0, 0});

}  // namespace

TEST_CASE("integer powers of a nilpotent matrix") {
    CHECK(powmat::mat_pow(kA5, 2) ==
          from_ints(4, {0, 0, -4, 13, 0, 0, 0, -10, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(powmat::mat_pow(kA5, 3) ==
          from_ints(4, {0, 0, 0, -20, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(powmat::mat_pow(kA5, 4) == Matrix(4));
    CHECK(powmat::mat_pow(kA5, 0) == Matrix::identity(4));
    CHECK_THROWS_AS(powmat::mat_pow(kA5, -1), std::invalid_argument);
}

TEST_CASE("power of a sum of exponents splits multiplicatively") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix a = testhelp::random_int_matrix(rng, 3, -3, 3);
        std::uniform_int_distribution<long long> e(0, 6);
        const long long e1 = e(rng), e2 = e(rng);
        CHECK(powmat::mat_pow(a, e1 + e2) == powmat::mat_pow(a, e1) * powmat::mat_pow(a, e2));
    }
}

TEST_CASE("characteristic polynomial, determinant, and adjugate on fixed inputs") {
    const auto r1 = powmat::faddeev_leverrier(kA1);
    CHECK(r1.charpoly == Poly({Rational(-12), Rational(16), Rational(-7), Rational(1)}));
    CHECK(r1.determinant == Rational(12));
    CHECK(kA1 * r1.adjugate == Rational(12) * Matrix::identity(3));

    const auto r5 = powmat::faddeev_leverrier(kA5);
    CHECK(r5.charpoly == Poly::monomial(4));
    CHECK(r5.determinant == Rational(0));

    const auto rid = powmat::faddeev_leverrier(Matrix::identity(3));
    CHECK(rid.charpoly ==
          Poly({Rational(-1), Rational(3), Rational(-3), Rational(1)}));
    CHECK(rid.determinant == Rational(1));
    CHECK(rid.adjugate == Matrix::identity(3));
}

TEST_CASE("characteristic polynomial matches the cofactor-expansion oracle") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> dims(1, 4);
        const Matrix a = testhelp::random_int_matrix(rng, dims(rng), -3, 3);
        const auto r = powmat::faddeev_leverrier(a);
        CHECK(r.charpoly == testhelp::oracle_charpoly(a));
        CHECK(r.determinant == testhelp::oracle_det(a));
        CHECK(a * r.adjugate == r.determinant * Matrix::identity(a.dim()));
        CHECK(r.adjugate * a == r.determinant * Matrix::identity(a.dim()));
    }
}

TEST_CASE("every matrix annihilates its characteristic polynomial") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> dims(1, 4);
        const int n = dims(rng);
        const Matrix a = testhelp::random_int_matrix(rng, n, -3, 3);
        const Poly p = powmat::faddeev_leverrier(a).charpoly;
        Matrix acc(n);
        for (int m = 0; m <= p.degree(); ++m)
            acc = acc + p.coeff(m) * powmat::mat_pow(a, m);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("exact inverse on fixed inputs") {
    const Matrix b = mat_inverse(kA1);
    CHECK(b.at(0, 0) == Rational(1, 6));
    CHECK(b.at(0, 1) == Rational(1, 3));
    CHECK(b.at(0, 2) == Rational(-1, 3));
    CHECK(b.at(1, 0) == Rational(5, 6));
    CHECK(b.at(2, 2) == Rational(3, 2));
    CHECK(kA1 * b == Matrix::identity(3));

    CHECK(mat_inverse(Matrix::identity(5)) == Matrix::identity(5));
    CHECK_THROWS_AS(mat_inverse(kA5), powmat::singular_error);
    CHECK_THROWS_AS(mat_inverse(Matrix(2)), powmat::singular_error);
}

TEST_CASE("inverse is two-sided on random invertible matrices") {
    std::mt19937_64 rng(34);
    int done = 0;
    while (done < 25) {
        const Matrix a = testhelp::random_int_matrix(rng, 3, -4, 4);
        if (powmat::faddeev_leverrier(a).determinant.is_zero()) continue;
        ++done;
        const Matrix inv = mat_inverse(a);
        CHECK(a * inv == Matrix::identity(3));
        CHECK(inv * a == Matrix::identity(3));
    }
}

TEST_CASE("constructors reject impossible shapes") {
    CHECK_THROWS_AS(Matrix(0), std::invalid_argument);
    CHECK_THROWS_AS(Matrix(2, {Rational(1)}), std::invalid_argument);
    CHECK(Matrix(3).is_zero());
    CHECK_FALSE(Matrix::identity(3).is_zero());
    CHECK(Matrix::identity(4).trace() == Rational(4));
    CHECK(kA1.trace() == Rational(7));
}
