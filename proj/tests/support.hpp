#pragma once

// Shared helpers for the test programs: literal builders, random inputs, the
// exhaustive spec enumeration and oracles that do not go through the code
// under test.

#include "qrev/canonical.hpp"
#include "qrev/io.hpp"
#include "qrev/matrix.hpp"
#include "qrev/numeric.hpp"
#include "qrev/scalar.hpp"

#include <functional>
#include <initializer_list>
#include <random>
#include <vector>

namespace qrev::test {

inline GaussianRational z(const char* text) { return parse_gaussian(text); }
inline Rational q(const char* text) { return parse_rational(text); }

inline CMatrix cmat(std::initializer_list<std::initializer_list<GaussianRational>> rows)
{
    const std::size_t n = rows.size(), m = rows.begin()->size();
    CMatrix out(n, m);
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (const auto& x : row)
            out(r, c++) = x;
        ++r;
    }
    return out;
}

inline QMatrix qmat(std::initializer_list<std::initializer_list<Quaternion>> rows)
{
    const std::size_t n = rows.size(), m = rows.begin()->size();
    QMatrix out(n, m);
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (const auto& x : row)
            out(r, c++) = x;
        ++r;
    }
    return out;
}

inline QMatrix scalar_matrix(const Quaternion& x) { return qmat({{x}}); }

/// Eigenvalue pool of the exhaustive sweeps.
inline std::vector<GaussianRational> eigenvalue_pool()
{
    return {z("1"), z("-1"), z("2"), z("1/2"), z("-2"), z("-1/2"), z("i"), z("3/5+4/5i"), z("1+i")};
}

/// Every JordanSpec with total size 1..max_total whose eigenvalues come from
/// the pool; each multiset of blocks appears once.
inline void for_each_spec(int max_total, const std::function<void(const JordanSpec&)>& visit)
{
    const auto pool = eigenvalue_pool();
    std::vector<JordanBlock> items;
    for (const auto& l : pool)
        for (int s = 1; s <= max_total; ++s)
            items.push_back({l, s});
    std::vector<JordanBlock> current;
    std::function<void(std::size_t, int)> rec = [&](std::size_t first, int remaining) {
        if (!current.empty())
            visit(JordanSpec(current));
        for (std::size_t k = first; k < items.size(); ++k) {
            if (items[k].size > remaining)
                continue;
            current.push_back(items[k]);
            rec(k, remaining - items[k].size);
            current.pop_back();
        }
    };
    rec(0, max_total);
}

inline Rational random_rational(std::mt19937_64& rng, int num_bound, int den_bound)
{
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    Rational out(num(rng), den(rng));
    out.canonicalize();
    return out;
}

inline GaussianRational random_gaussian(std::mt19937_64& rng, int num_bound = 5, int den_bound = 4)
{
    return {random_rational(rng, num_bound, den_bound), random_rational(rng, num_bound, den_bound)};
}

inline GaussianRational random_nonzero_gaussian(std::mt19937_64& rng)
{
    GaussianRational out;
    while (is_zero(out))
        out = random_gaussian(rng);
    return out;
}

inline Quaternion random_quaternion(std::mt19937_64& rng, int num_bound = 3, int den_bound = 1)
{
    return {random_rational(rng, num_bound, den_bound), random_rational(rng, num_bound, den_bound),
            random_rational(rng, num_bound, den_bound), random_rational(rng, num_bound, den_bound)};
}

inline QMatrix random_qmatrix(std::mt19937_64& rng, std::size_t n, int num_bound = 3, int den_bound = 1)
{
    QMatrix out(n, n);
    for (auto& x : out.entries())
        x = random_quaternion(rng, num_bound, den_bound);
    return out;
}

/// Random invertible integer quaternion matrix with cond(Φ) at most max_cond.
inline QMatrix random_conditioned(std::mt19937_64& rng, std::size_t n, double max_cond)
{
    while (true) {
        QMatrix s = random_qmatrix(rng, n, 3, 1);
        if (qdet(s) >= 1 && phi_condition(s) <= max_cond)
            return s;
    }
}

/// Jordan spec of an exact matrix from exact ranks of (Φ(A) − λI)^k over a
/// list of candidate eigenvalues; independent of the pairing logic.
inline std::vector<JordanBlock> blocks_by_rank(const QMatrix& a,
                                               const std::vector<GaussianRational>& candidates)
{
    std::vector<JordanBlock> out;
    for (const auto& l : candidates) {
        const Partition p = jordan_sizes_exact(a, l);
        for (int s : p.parts())
            out.push_back({l, s});
    }
    return out;
}

inline bool is_upper_toeplitz(const CMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j < i && !is_zero(m(i, j)))
                return false;
            if (i > 0 && j > 0 && !(m(i, j) == m(i - 1, j - 1)))
                return false;
        }
    return true;
}

} // namespace qrev::test
