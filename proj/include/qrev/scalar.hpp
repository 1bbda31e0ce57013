#pragma once

// Exact scalar tower: rationals, Gaussian rationals and rational quaternions.

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace qrev {

using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Complex number with rational real and imaginary parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(long r) : re(r) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational imag_unit() { return {Rational(0), Rational(1)}; }

    bool is_real() const { return sgn(im) == 0; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend bool operator==(const GaussianRational& x, const GaussianRational& y)
    {
        return x.re == y.re && x.im == y.im;
    }
};

inline bool is_zero(const GaussianRational& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }
GaussianRational operator+(GaussianRational x, const GaussianRational& y);
GaussianRational operator-(GaussianRational x, const GaussianRational& y);
GaussianRational operator*(const GaussianRational& x, const GaussianRational& y);
GaussianRational operator/(GaussianRational x, const GaussianRational& y);
GaussianRational operator-(const GaussianRational& x);

GaussianRational conj(const GaussianRational& z);
Rational norm_sq(const GaussianRational& z);
/// Throws DivisionByZero on 0.
GaussianRational inverse(const GaussianRational& z);
GaussianRational pow(const GaussianRational& z, int exponent);

bool is_unit_modulus(const GaussianRational& z);

/// Representative of the quaternionic similarity class of z: the member of
/// {z, conj(z)} with non-negative imaginary part.
GaussianRational class_rep(const GaussianRational& z);
/// class_rep(λ⁻¹) = λ/|λ|² for λ in the closed upper half plane.
GaussianRational class_rep_inverse(const GaussianRational& lambda);
/// class_rep(−λ⁻¹).
GaussianRational class_rep_neg_inverse(const GaussianRational& lambda);

/// Strict ordering by (re, im); used for canonical block order.
bool less(const GaussianRational& x, const GaussianRational& y);

std::string to_string(const GaussianRational& z);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// a + b·i + c·j + d·k with rational coefficients.
struct Quaternion {
    Rational a;
    Rational b;
    Rational c;
    Rational d;

    Quaternion() = default;
    Quaternion(long r) : a(r) {}
    Quaternion(Rational r) : a(std::move(r)) {}
    Quaternion(const GaussianRational& z) : a(z.re), b(z.im) {}
    Quaternion(Rational a_, Rational b_, Rational c_, Rational d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_))
    {
    }

    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    /// True when the j and k parts vanish.
    bool is_complex() const { return sgn(c) == 0 && sgn(d) == 0; }
    GaussianRational complex_part() const { return {a, b}; }
    /// The w with x = complex_part() + w·j.
    GaussianRational j_part() const { return {c, d}; }

    Quaternion& operator+=(const Quaternion& o);
    Quaternion& operator-=(const Quaternion& o);

    friend bool operator==(const Quaternion& x, const Quaternion& y)
    {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

inline bool is_zero(const Quaternion& q)
{
    return sgn(q.a) == 0 && sgn(q.b) == 0 && sgn(q.c) == 0 && sgn(q.d) == 0;
}
Quaternion operator+(Quaternion x, const Quaternion& y);
Quaternion operator-(Quaternion x, const Quaternion& y);
/// Hamilton product.
Quaternion operator*(const Quaternion& x, const Quaternion& y);
Quaternion operator-(const Quaternion& x);

Quaternion conj(const Quaternion& x);
Rational norm_sq(const Quaternion& x);
/// Throws DivisionByZero on 0.
Quaternion inverse(const Quaternion& x);

std::string to_string(const Quaternion& q);
std::ostream& operator<<(std::ostream& os, const Quaternion& q);

} // namespace qrev
