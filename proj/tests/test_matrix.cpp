#include "support.hpp"

#include "qrev/errors.hpp"

#include <doctest.h>

using namespace qrev;
using namespace qrev::test;

namespace {
const Quaternion I_ = Quaternion::i();
const Quaternion J_ = Quaternion::j();
const Quaternion K_ = Quaternion::k();
} // namespace

TEST_CASE("products")
{
    const QMatrix a = to_quaternion(jordan_block(z("i"), 2));
    CHECK(QMatrix::identity(2) * a == a);
    CHECK(a * inverse(a) == QMatrix::identity(2));
    CHECK(scalar_matrix(J_) * scalar_matrix(I_) == scalar_matrix(-K_));
    CHECK_THROWS_AS(QMatrix(2, 3) * QMatrix(2, 3), ShapeError);
}

TEST_CASE("inverse")
{
    CHECK(inverse(to_quaternion(jordan_block(z("2"), 2))) ==
          to_quaternion(cmat({{z("1/2"), z("-1/4")}, {z("0"), z("1/2")}})));
    CHECK(inverse(scalar_matrix(J_)) == scalar_matrix(-J_));
    CHECK(inverse(QMatrix::identity(4)) == QMatrix::identity(4));
    CHECK_THROWS_AS(inverse(QMatrix(2, 2)), SingularError);
    CHECK_THROWS_AS(inverse(QMatrix(2, 3)), ShapeError);

    std::mt19937_64 rng(21);
    for (int t = 0; t < 30; ++t) {
        const QMatrix a = random_qmatrix(rng, 4, 3, 2);
        if (sgn(qdet(a)) == 0)
            continue;
        const QMatrix inv = inverse(a);
        CHECK(a * inv == QMatrix::identity(4));
        CHECK(inv * a == QMatrix::identity(4));
    }
}

TEST_CASE("complex adjoint")
{
    CHECK(phi_embed(scalar_matrix(J_)) == cmat({{z("0"), z("1")}, {z("-1"), z("0")}}));
    CHECK(phi_embed(scalar_matrix(I_)) == cmat({{z("i"), z("0")}, {z("0"), z("-i")}}));
    std::mt19937_64 rng(22);
    for (int t = 0; t < 20; ++t) {
        const QMatrix a = random_qmatrix(rng, 3), b = random_qmatrix(rng, 3);
        CHECK(phi_embed(a * b) == phi_embed(a) * phi_embed(b));
        CHECK(phi_embed(a + b) == phi_embed(a) + phi_embed(b));
    }
}

TEST_CASE("determinant of the complex adjoint")
{
    CHECK(qdet(scalar_matrix(J_)) == 1);
    CHECK(qdet(scalar_matrix(Quaternion(q("1"), q("0"), q("1"), q("0")))) == 2);
    CHECK(qdet(QMatrix::identity(5)) == 1);
    CHECK(qdet(QMatrix(3, 3)) == 0);
    // Oracle: Φ of a 1x1 quaternion x has determinant |x|².
    std::mt19937_64 rng(23);
    for (int t = 0; t < 50; ++t) {
        const Quaternion x = random_quaternion(rng, 5, 3);
        CHECK(qdet(scalar_matrix(x)) == norm_sq(x));
    }
    for (int t = 0; t < 30; ++t) {
        const QMatrix a = random_qmatrix(rng, 3), b = random_qmatrix(rng, 3);
        CHECK(sgn(qdet(a)) >= 0);
        CHECK(qdet(a * b) == qdet(a) * qdet(b));
    }
}

TEST_CASE("complex determinant by cofactor expansion")
{
    // Independent oracle: Leibniz expansion on 3x3.
    std::mt19937_64 rng(24);
    for (int t = 0; t < 30; ++t) {
        CMatrix m(3, 3);
        for (auto& x : m.entries())
            x = random_gaussian(rng);
        const GaussianRational leibniz = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                                         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                                         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        CHECK(det(m) == leibniz);
    }
}

TEST_CASE("involution tests")
{
    const QMatrix omega12 = to_quaternion(cmat({{z("-1"), z("0")}, {z("0"), z("1")}}));
    CHECK(is_involution(omega12));
    CHECK(is_skew_involution(scalar_matrix(J_)));
    CHECK_FALSE(is_involution(to_quaternion(jordan_block(z("1"), 2))));
    CHECK_FALSE(is_skew_involution(QMatrix::identity(2)));
}

TEST_CASE("conjugacy residual")
{
    CHECK(conjugacy_residual(scalar_matrix(J_), scalar_matrix(I_), scalar_matrix(-I_)).is_zero());
    const QMatrix a = to_quaternion(jordan_block(z("2"), 3));
    CHECK(conjugacy_residual(QMatrix::identity(3), a, a).is_zero());
    CHECK_FALSE(conjugacy_residual(QMatrix::identity(3), a, inverse(a)).is_zero());
    CHECK_THROWS_AS(conjugacy_residual(QMatrix(3, 3), a, a), SingularError);
    CHECK_THROWS_AS(conjugacy_residual(QMatrix::identity(2), a, a), ShapeError);
}

TEST_CASE("upper triangular Toeplitz builder")
{
    const Quaternion a(q("2"), q("1"), q("0"), q("0"));
    const std::vector<Quaternion> one = {a};
    CHECK(toeplitz_build(one) == scalar_matrix(a));
    std::vector<Quaternion> unit(4, Quaternion(0));
    unit[0] = Quaternion(1);
    CHECK(toeplitz_build(unit) == QMatrix::identity(4));
    const std::vector<Quaternion> two = {a, J_};
    CHECK(toeplitz_build(two) == qmat({{a, J_}, {Quaternion(0), a}}));
    CHECK_THROWS_AS(toeplitz_build(std::vector<Quaternion>{}), ShapeError);
}

TEST_CASE("exact rank")
{
    CHECK(rank(CMatrix::identity(3)) == 3);
    CHECK(rank(CMatrix(2, 4)) == 0);
    CHECK(rank(jordan_block(z("0"), 4)) == 3);
    CHECK(rank(cmat({{z("1"), z("i")}, {z("i"), z("-1")}})) == 1);
}

TEST_CASE("to_complex rejects j parts")
{
    CHECK_THROWS_AS(to_complex(scalar_matrix(J_)), DomainError);
    CHECK(to_complex(to_quaternion(jordan_block(z("i"), 2))) == jordan_block(z("i"), 2));
}
