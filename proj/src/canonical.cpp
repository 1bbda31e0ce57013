#include "qrev/canonical.hpp"

#include "qrev/errors.hpp"

#include <algorithm>
#include <random>

namespace qrev {

JordanSpec::JordanSpec(std::vector<JordanBlock> blocks) : blocks_(std::move(blocks))
{
    for (auto& b : blocks_) {
        if (is_zero(b.eigenvalue))
            throw SpecError("Jordan spec has a zero eigenvalue");
        if (b.size < 1)
            throw SpecError("Jordan block size must be positive");
        b.eigenvalue = class_rep(b.eigenvalue);
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const JordanBlock& x, const JordanBlock& y) {
        if (!(x.eigenvalue == y.eigenvalue))
            return less(x.eigenvalue, y.eigenvalue);
        return x.size > y.size;
    });
}

int JordanSpec::dimension() const noexcept
{
    int n = 0;
    for (const auto& b : blocks_)
        n += b.size;
    return n;
}

int JordanSpec::offset(std::size_t i) const
{
    int n = 0;
    for (std::size_t k = 0; k < i; ++k)
        n += blocks_[k].size;
    return n;
}

Partition JordanSpec::sizes_for(const GaussianRational& eigenvalue) const
{
    const GaussianRational rep = class_rep(eigenvalue);
    std::vector<int> sizes;
    for (const auto& b : blocks_)
        if (b.eigenvalue == rep)
            sizes.push_back(b.size);
    return Partition::from_parts(std::move(sizes));
}

std::vector<GaussianRational> JordanSpec::eigenvalues() const
{
    std::vector<GaussianRational> out;
    for (const auto& b : blocks_)
        if (out.empty() || !(out.back() == b.eigenvalue))
            out.push_back(b.eigenvalue);
    return out;
}

std::string to_string(const JordanSpec& spec)
{
    std::string out = "[";
    for (std::size_t i = 0; i < spec.size(); ++i)
        out += (i ? ", (" : "(") + to_string(spec[i].eigenvalue) + "," +
               std::to_string(spec[i].size) + ")";
    return out + "]";
}

CMatrix jordan_block(const GaussianRational& lambda, int n)
{
    if (n < 1)
        throw SpecError("Jordan block size must be positive");
    CMatrix j(n, n);
    for (int i = 0; i < n; ++i) {
        j(i, i) = lambda;
        if (i + 1 < n)
            j(i, i + 1) = GaussianRational(1);
    }
    return j;
}

QMatrix jordan_matrix(const JordanSpec& spec)
{
    const int n = spec.dimension();
    QMatrix out(n, n);
    for (std::size_t b = 0; b < spec.size(); ++b)
        out.set_block(spec.offset(b), spec.offset(b),
                      to_quaternion(jordan_block(spec[b].eigenvalue, spec[b].size)));
    return out;
}

CMatrix basic_weyr_matrix(const GaussianRational& lambda, const WeyrStructure& w)
{
    const int n = w.total();
    CMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        out(i, i) = lambda;
    for (std::size_t b = 0; b + 1 < w.blocks(); ++b) {
        const int r0 = w.offset(b), c0 = w.offset(b + 1);
        for (int k = 0; k < w.sizes()[b + 1]; ++k)
            out(r0 + k, c0 + k) = GaussianRational(1);
    }
    return out;
}

CMatrix jordan_weyr_permutation(const Partition& jordan_sizes)
{
    const WeyrStructure w = weyr_structure_of(jordan_sizes);
    const int n = jordan_sizes.total();
    CMatrix p(n, n);
    int old_index = 0;
    const auto& chains = jordan_sizes.parts();
    for (std::size_t c = 0; c < chains.size(); ++c)
        for (int level = 0; level < chains[c]; ++level, ++old_index) {
            const int new_index = w.offset(level) + static_cast<int>(c);
            p(new_index, old_index) = GaussianRational(1);
        }
    return p;
}

CMatrix weyr_centralizer_sample(const WeyrStructure& w, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-4, 4);
    auto draw = [&] { return GaussianRational(coef(rng), coef(rng)); };

    const std::size_t r = w.blocks();
    const auto& n = w.sizes();
    const int dim = w.total();
    CMatrix k(dim, dim);
    // Block rows are filled bottom-up: K_{i,j} repeats K_{i+1,j+1} in its
    // top-left n_{i+1} x n_{j+1} corner, is zero below it, and is free in the
    // trailing n_j - n_{j+1} columns. The last block column is free.
    for (std::size_t i = r; i-- > 0;) {
        const int r0 = w.offset(i);
        for (std::size_t j = i; j < r; ++j) {
            const int c0 = w.offset(j);
            if (j + 1 == r) {
                for (int a = 0; a < n[i]; ++a)
                    for (int b = 0; b < n[j]; ++b)
                        k(r0 + a, c0 + b) = draw();
                continue;
            }
            const int inner_r0 = w.offset(i + 1), inner_c0 = w.offset(j + 1);
            for (int a = 0; a < n[i]; ++a)
                for (int b = 0; b < n[j]; ++b) {
                    if (b >= n[j + 1])
                        k(r0 + a, c0 + b) = draw();
                    else if (a < n[i + 1])
                        k(r0 + a, c0 + b) = k(inner_r0 + a, inner_c0 + b);
                }
        }
    }
    return k;
}

} // namespace qrev
