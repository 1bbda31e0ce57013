#pragma once

// Dense matrices over the exact scalar tower. H^n is treated as a right
// H-module: scalar multiplication of a matrix acts on the right, and row
// reduction only ever multiplies rows on the left.

#include "qrev/errors.hpp"
#include "qrev/scalar.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qrev {

template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const T> entries() const noexcept { return data_; }
    std::span<T> entries() noexcept { return data_; }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!qrev::is_zero(x))
                return false;
        return true;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        Matrix out(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j)
                out(i, j) = (*this)(r0 + i, c0 + j);
        return out;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b)
    {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                (*this)(r0 + i, c0 + j) = b(i, j);
    }

    Matrix& operator+=(const Matrix& o)
    {
        require_same_shape(o, "addition");
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] += o.data_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o)
    {
        require_same_shape(o, "subtraction");
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] -= o.data_[k];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator-(const Matrix& a)
    {
        Matrix out(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            out.data_[k] = -a.data_[k];
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw ShapeError("product of " + shape_string(a) + " and " + shape_string(b));
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (qrev::is_zero(aik))
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (!qrev::is_zero(bkj))
                        out(i, j) += aik * bkj;
                }
            }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend std::string shape_string(const Matrix& m)
    {
        return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
    }

private:
    void require_same_shape(const Matrix& o, const char* what) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw ShapeError(std::string(what) + " of " + shape_string(*this) + " and " +
                             shape_string(o));
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using QMatrix = Matrix<Quaternion>;
using CMatrix = Matrix<GaussianRational>;

/// A·q, every entry multiplied by q on the right.
template <class T>
Matrix<T> scale_right(const Matrix<T>& a, const T& q)
{
    Matrix<T> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j) * q;
    return out;
}

/// q·A.
template <class T>
Matrix<T> scale_left(const T& q, const Matrix<T>& a)
{
    Matrix<T> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = q * a(i, j);
    return out;
}

/// Gauss-Jordan inversion over a (possibly noncommutative) division ring.
/// Every row operation is a left multiplication, so the accumulated
/// operator is exactly the left inverse, which is also the right inverse.
template <class T>
Matrix<T> inverse(const Matrix<T>& a)
{
    if (!a.is_square())
        throw ShapeError("inverse of non-square " + shape_string(a));
    const std::size_t n = a.rows();
    Matrix<T> work = a;
    Matrix<T> inv = Matrix<T>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && is_zero(work(pivot, col)))
            ++pivot;
        if (pivot == n)
            throw SingularError("matrix is singular");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(pivot, j), work(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        const T scale = inverse(work(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            work(col, j) = scale * work(col, j);
            inv(col, j) = scale * inv(col, j);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(work(r, col)))
                continue;
            const T factor = work(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                if (!is_zero(work(col, j)))
                    work(r, j) -= factor * work(col, j);
                if (!is_zero(inv(col, j)))
                    inv(r, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b)
{
    Matrix<T> out(a.rows() + b.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), a.cols(), b);
    return out;
}

/// [[0, upper], [lower, 0]] for square blocks of equal size.
template <class T>
Matrix<T> antidiag(const Matrix<T>& upper, const Matrix<T>& lower)
{
    if (!upper.is_square() || upper.rows() != lower.rows() || !lower.is_square())
        throw ShapeError("antidiagonal blocks must be square of equal size");
    const std::size_t n = upper.rows();
    Matrix<T> out(2 * n, 2 * n);
    out.set_block(0, n, upper);
    out.set_block(n, 0, lower);
    return out;
}

/// Lift a complex matrix into the quaternion matrices (j, k parts zero).
QMatrix to_quaternion(const CMatrix& m);
/// Inverse of to_quaternion; ShapeError-free but throws DomainError if any
/// entry has a j or k part.
CMatrix to_complex(const QMatrix& m);
bool is_complex(const QMatrix& m);
/// Entrywise complex conjugate.
CMatrix conj(const CMatrix& m);

/// Φ(A) = [[A1, A2], [-conj(A2), conj(A1)]] for A = A1 + A2·j.
CMatrix phi_embed(const QMatrix& a);

/// Determinant of a square complex matrix by Bareiss elimination.
GaussianRational det(const CMatrix& m);
/// det Φ(A); a non-negative rational.
Rational qdet(const QMatrix& a);

bool is_involution(const QMatrix& g);
bool is_skew_involution(const QMatrix& g);

/// gA − Bg, which vanishes exactly when gAg⁻¹ = B (g invertible).
/// Throws SingularError if g is singular.
QMatrix conjugacy_residual(const QMatrix& g, const QMatrix& a, const QMatrix& b);

/// Upper-triangular Toeplitz matrix with first row x.
QMatrix toeplitz_build(std::span<const Quaternion> x);

/// Exact rank of a complex matrix.
std::size_t rank(const CMatrix& m);

std::string to_string(const QMatrix& m);

} // namespace qrev
