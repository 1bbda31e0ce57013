#include "support.hpp"

#include "qrev/errors.hpp"

#include <doctest.h>

using namespace qrev;
using namespace qrev::test;

TEST_CASE("quaternion units follow the Hamilton relations")
{
    const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(j * k == i);
    CHECK(k * i == j);
    CHECK(i * i == Quaternion(-1));
    CHECK(j * j == Quaternion(-1));
    CHECK(k * k == Quaternion(-1));
    CHECK(i * j * k == Quaternion(-1));
}

TEST_CASE("j moves past a complex number as its conjugate")
{
    const Quaternion w(z("3/5+4/5i"));
    const Quaternion j = Quaternion::j();
    const Quaternion expected(q("0"), q("0"), q("3/5"), q("-4/5"));
    CHECK(j * w == expected);
    CHECK(j * w == Quaternion(conj(z("3/5+4/5i"))) * j);
}

TEST_CASE("quaternion product agrees with the 2x2 complex representation")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const Quaternion x = random_quaternion(rng, 4, 3), y = random_quaternion(rng, 4, 3);
        const CMatrix px = phi_embed(scalar_matrix(x)), py = phi_embed(scalar_matrix(y));
        CHECK(phi_embed(scalar_matrix(x * y)) == px * py);
    }
}

TEST_CASE("quaternion conjugate, norm and inverse")
{
    const Quaternion one_plus_j(q("1"), q("0"), q("1"), q("0"));
    CHECK(conj(one_plus_j) == Quaternion(q("1"), q("0"), q("-1"), q("0")));
    CHECK(norm_sq(one_plus_j) == 2);
    CHECK(inverse(Quaternion::j()) == -Quaternion::j());
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const Quaternion x = random_quaternion(rng, 5, 4);
        if (is_zero(x))
            continue;
        CHECK(x * inverse(x) == Quaternion(1));
        CHECK(inverse(x) * x == Quaternion(1));
        CHECK(x * conj(x) == Quaternion(norm_sq(x)));
    }
    CHECK_THROWS_AS(inverse(Quaternion(0)), DivisionByZero);
}

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("3/5") == Rational(3, 5));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational(" 7 ") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
}

TEST_CASE("class representative has non-negative imaginary part")
{
    CHECK(class_rep(z("2-3i")) == z("2+3i"));
    CHECK(class_rep(z("5")) == z("5"));
    CHECK(class_rep(z("i")) == z("i"));
    CHECK(class_rep(z("-i")) == z("i"));
}

TEST_CASE("class representative of the inverse")
{
    CHECK(class_rep_inverse(z("2")) == z("1/2"));
    CHECK(class_rep_inverse(z("3/5+4/5i")) == z("3/5+4/5i"));
    CHECK(class_rep_inverse(z("1+i")) == z("1/2+1/2i"));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        const GaussianRational l = class_rep(random_nonzero_gaussian(rng));
        CHECK(class_rep_inverse(l) == class_rep(inverse(l)));
        CHECK(class_rep_inverse(class_rep_inverse(l)) == l);
    }
}

TEST_CASE("class representative of minus the inverse")
{
    CHECK(class_rep_neg_inverse(z("1")) == z("-1"));
    CHECK(class_rep_neg_inverse(z("i")) == z("i"));
    CHECK(class_rep_neg_inverse(z("2")) == z("-1/2"));
    CHECK(class_rep_neg_inverse(z("1+i")) == z("-1/2+1/2i"));
    std::mt19937_64 rng(4);
    for (int t = 0; t < 100; ++t) {
        const GaussianRational l = class_rep(random_nonzero_gaussian(rng));
        CHECK(class_rep_neg_inverse(l) == class_rep(-inverse(l)));
        // Only i is its own partner.
        CHECK((class_rep_neg_inverse(l) == l) == (l == z("i")));
    }
}

TEST_CASE("gaussian rational arithmetic")
{
    CHECK(z("1+i") * z("1-i") == z("2"));
    CHECK(inverse(z("1+i")) == z("1/2-1/2i"));
    CHECK(pow(z("i"), 4) == z("1"));
    CHECK(pow(z("2"), -3) == z("1/8"));
    CHECK(is_unit_modulus(z("3/5+4/5i")));
    CHECK_FALSE(is_unit_modulus(z("1+i")));
    CHECK(norm_sq(z("3+4i")) == 25);
    CHECK_THROWS_AS(inverse(GaussianRational(0)), DivisionByZero);
}

TEST_CASE("text forms")
{
    CHECK(to_string(z("3/5+4/5i")) == "3/5+4/5i");
    CHECK(to_string(z("-i")) == "-i");
    CHECK(to_string(z("2")) == "2");
    CHECK(to_string(Quaternion(q("1"), q("-2"), q("0"), q("1/2"))) == "1-2i+1/2k");
    CHECK(to_string(Quaternion(0)) == "0");
}
