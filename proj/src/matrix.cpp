#include "qrev/matrix.hpp"

#include <sstream>

namespace qrev {

QMatrix to_quaternion(const CMatrix& m)
{
    QMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = Quaternion(m(i, j));
    return out;
}

CMatrix to_complex(const QMatrix& m)
{
    CMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_complex())
                throw DomainError("matrix has non-complex quaternion entries");
            out(i, j) = m(i, j).complex_part();
        }
    return out;
}

bool is_complex(const QMatrix& m)
{
    for (const auto& q : m.entries())
        if (!q.is_complex())
            return false;
    return true;
}

CMatrix conj(const CMatrix& m)
{
    CMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = conj(m(i, j));
    return out;
}

CMatrix phi_embed(const QMatrix& a)
{
    const std::size_t r = a.rows(), c = a.cols();
    CMatrix out(2 * r, 2 * c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            const GaussianRational a1 = a(i, j).complex_part();
            const GaussianRational a2 = a(i, j).j_part();
            out(i, j) = a1;
            out(i, c + j) = a2;
            out(r + i, j) = -conj(a2);
            out(r + i, c + j) = conj(a1);
        }
    return out;
}

GaussianRational det(const CMatrix& m)
{
    if (!m.is_square())
        throw ShapeError("determinant of non-square " + shape_string(m));
    const std::size_t n = m.rows();
    if (n == 0)
        return GaussianRational(1);
    CMatrix w = m;
    GaussianRational prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(w(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(w(p, k)))
                ++p;
            if (p == n)
                return GaussianRational(0);
            for (std::size_t j = 0; j < n; ++j)
                std::swap(w(p, j), w(k, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
            w(i, k) = GaussianRational(0);
        }
        prev = w(k, k);
    }
    GaussianRational d = w(n - 1, n - 1);
    return negate ? -d : d;
}

Rational qdet(const QMatrix& a)
{
    if (!a.is_square())
        throw ShapeError("determinant of non-square " + shape_string(a));
    GaussianRational d = det(phi_embed(a));
    // det Φ(A) is real and non-negative for every quaternion matrix.
    if (!d.is_real() || sgn(d.re) < 0)
        throw std::logic_error("det of complex adjoint is not a non-negative real: " +
                               to_string(d));
    return d.re;
}

namespace {

bool square_equals_scaled_identity(const QMatrix& g, long s)
{
    if (!g.is_square())
        throw ShapeError("square test of non-square " + shape_string(g));
    const QMatrix sq = g * g;
    for (std::size_t i = 0; i < sq.rows(); ++i)
        for (std::size_t j = 0; j < sq.cols(); ++j)
            if (!(sq(i, j) == Quaternion(i == j ? s : 0)))
                return false;
    return true;
}

} // namespace

bool is_involution(const QMatrix& g) { return square_equals_scaled_identity(g, 1); }
bool is_skew_involution(const QMatrix& g) { return square_equals_scaled_identity(g, -1); }

QMatrix conjugacy_residual(const QMatrix& g, const QMatrix& a, const QMatrix& b)
{
    if (!g.is_square() || !a.is_square() || !b.is_square() || g.rows() != a.rows() ||
        a.rows() != b.rows())
        throw ShapeError("conjugacy residual needs square matrices of one size");
    if (sgn(qdet(g)) == 0)
        throw SingularError("conjugator is singular");
    return g * a - b * g;
}

QMatrix toeplitz_build(std::span<const Quaternion> x)
{
    if (x.empty())
        throw ShapeError("Toeplitz generator must be nonempty");
    const std::size_t n = x.size();
    QMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            out(i, j) = x[j - i];
    return out;
}

std::size_t rank(const CMatrix& m)
{
    CMatrix w = m;
    std::size_t r = 0;
    for (std::size_t col = 0; col < w.cols() && r < w.rows(); ++col) {
        std::size_t p = r;
        while (p < w.rows() && is_zero(w(p, col)))
            ++p;
        if (p == w.rows())
            continue;
        for (std::size_t j = 0; j < w.cols(); ++j)
            std::swap(w(p, j), w(r, j));
        const GaussianRational piv_inv = inverse(w(r, col));
        for (std::size_t i = r + 1; i < w.rows(); ++i) {
            if (is_zero(w(i, col)))
                continue;
            const GaussianRational f = w(i, col) * piv_inv;
            for (std::size_t j = col; j < w.cols(); ++j)
                if (!is_zero(w(r, j)))
                    w(i, j) -= f * w(r, j);
        }
        ++r;
    }
    return r;
}

std::string to_string(const QMatrix& m)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

} // namespace qrev
