#include "qrev/scalar.hpp"

#include "qrev/errors.hpp"

#include <cctype>
#include <ostream>

namespace qrev {

Rational parse_rational(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s.push_back(ch);
    if (s.empty())
        throw ParseError("empty rational");
    if (s.front() == '+')
        s.erase(s.begin());
    auto valid_int = [](std::string_view t) {
        if (!t.empty() && t.front() == '-')
            t.remove_prefix(1);
        if (t.empty())
            return false;
        for (char ch : t)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-')
        throw ParseError("malformed rational '" + std::string(text) + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& x) { return x.get_str(); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
    re += o.re;
    im += o.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    *this = *this * o;
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o)
{
    *this = *this * inverse(o);
    return *this;
}

GaussianRational operator+(GaussianRational x, const GaussianRational& y) { return x += y; }
GaussianRational operator-(GaussianRational x, const GaussianRational& y) { return x -= y; }

GaussianRational operator*(const GaussianRational& x, const GaussianRational& y)
{
    if (x.is_real() && y.is_real())
        return {x.re * y.re};
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

GaussianRational operator/(GaussianRational x, const GaussianRational& y) { return x /= y; }
GaussianRational operator-(const GaussianRational& x) { return {-x.re, -x.im}; }

GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }
Rational norm_sq(const GaussianRational& z) { return z.re * z.re + z.im * z.im; }

GaussianRational inverse(const GaussianRational& z)
{
    Rational n = norm_sq(z);
    if (sgn(n) == 0)
        throw DivisionByZero();
    return {z.re / n, -z.im / n};
}

GaussianRational pow(const GaussianRational& z, int exponent)
{
    GaussianRational base = exponent < 0 ? inverse(z) : z;
    unsigned e = exponent < 0 ? -static_cast<unsigned>(exponent) : exponent;
    GaussianRational result(1);
    while (e) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

bool is_unit_modulus(const GaussianRational& z) { return norm_sq(z) == 1; }

GaussianRational class_rep(const GaussianRational& z)
{
    return sgn(z.im) >= 0 ? z : conj(z);
}

GaussianRational class_rep_inverse(const GaussianRational& lambda)
{
    return class_rep(inverse(lambda));
}

GaussianRational class_rep_neg_inverse(const GaussianRational& lambda)
{
    return class_rep(-inverse(lambda));
}

bool less(const GaussianRational& x, const GaussianRational& y)
{
    if (x.re != y.re)
        return x.re < y.re;
    return x.im < y.im;
}

std::string to_string(const GaussianRational& z)
{
    if (z.is_real())
        return to_string(z.re);
    std::string im;
    if (z.im == 1)
        im = "i";
    else if (z.im == -1)
        im = "-i";
    else
        im = to_string(z.im) + "i";
    if (sgn(z.re) == 0)
        return im;
    return to_string(z.re) + (sgn(z.im) > 0 ? "+" : "") + im;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

Quaternion& Quaternion::operator+=(const Quaternion& o)
{
    a += o.a;
    b += o.b;
    c += o.c;
    d += o.d;
    return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o)
{
    a -= o.a;
    b -= o.b;
    c -= o.c;
    d -= o.d;
    return *this;
}

Quaternion operator+(Quaternion x, const Quaternion& y) { return x += y; }
Quaternion operator-(Quaternion x, const Quaternion& y) { return x -= y; }

Quaternion operator*(const Quaternion& x, const Quaternion& y)
{
    // Most entries in practice are complex; skip the j,k terms when possible.
    if (x.is_complex() && y.is_complex()) {
        if (sgn(x.b) == 0 && sgn(y.b) == 0)
            return Quaternion(x.a * y.a);
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a, 0, 0};
    }
    return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
            x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
            x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
            x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
}

Quaternion operator-(const Quaternion& x) { return {-x.a, -x.b, -x.c, -x.d}; }

Quaternion conj(const Quaternion& x) { return {x.a, -x.b, -x.c, -x.d}; }

Rational norm_sq(const Quaternion& x) { return x.a * x.a + x.b * x.b + x.c * x.c + x.d * x.d; }

Quaternion inverse(const Quaternion& x)
{
    Rational n = norm_sq(x);
    if (sgn(n) == 0)
        throw DivisionByZero();
    return {x.a / n, -x.b / n, -x.c / n, -x.d / n};
}

std::string to_string(const Quaternion& q)
{
    std::string out;
    auto term = [&out](const Rational& coef, const char* unit) {
        if (sgn(coef) == 0)
            return;
        std::string mag;
        if (*unit && abs(coef) == 1)
            mag = "";
        else
            mag = to_string(Rational(abs(coef)));
        if (out.empty())
            out += sgn(coef) < 0 ? "-" : "";
        else
            out += sgn(coef) < 0 ? "-" : "+";
        out += mag + unit;
    };
    term(q.a, "");
    term(q.b, "i");
    term(q.c, "j");
    term(q.d, "k");
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << to_string(q); }

} // namespace qrev
