#pragma once

#include "qrev/matrix.hpp"
#include "qrev/partition.hpp"
#include "qrev/scalar.hpp"

#include <cstdint>
#include <vector>

namespace qrev {

struct JordanBlock {
    GaussianRational eigenvalue;
    int size = 1;

    friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

/// Multiset of Jordan blocks describing the conjugacy class of an invertible
/// quaternion matrix. Eigenvalues are stored as class representatives
/// (imaginary part >= 0); blocks are kept sorted by (re, im, size descending).
class JordanSpec {
public:
    JordanSpec() = default;
    /// Normalizes every eigenvalue to its class representative and sorts.
    /// Throws SpecError on a zero eigenvalue or non-positive size.
    explicit JordanSpec(std::vector<JordanBlock> blocks);

    const std::vector<JordanBlock>& blocks() const noexcept { return blocks_; }
    std::size_t size() const noexcept { return blocks_.size(); }
    const JordanBlock& operator[](std::size_t i) const { return blocks_[i]; }
    /// Total matrix dimension n.
    int dimension() const noexcept;
    /// Row offset of block i in jordan_matrix.
    int offset(std::size_t i) const;

    /// Block sizes of one eigenvalue class; empty if absent.
    Partition sizes_for(const GaussianRational& eigenvalue) const;
    /// Distinct class representatives in canonical order.
    std::vector<GaussianRational> eigenvalues() const;

    friend bool operator==(const JordanSpec&, const JordanSpec&) = default;

private:
    std::vector<JordanBlock> blocks_;
};

std::string to_string(const JordanSpec& spec);

/// J(λ, n): λ on the diagonal, 1 on the superdiagonal.
CMatrix jordan_block(const GaussianRational& lambda, int n);
/// Block-diagonal Jordan matrix in canonical block order.
QMatrix jordan_matrix(const JordanSpec& spec);

/// Diagonal blocks λ·I_{n_i}, superdiagonal blocks [I; 0] of size n_i × n_{i+1}.
CMatrix basic_weyr_matrix(const GaussianRational& lambda, const WeyrStructure& w);

/// Permutation matrix P with P·J·P⁻¹ = W, where J is the Jordan matrix with
/// the given block sizes (longest chain first) and W the basic Weyr matrix of
/// the conjugate partition. Vector k of chain c goes to slot c of level k.
CMatrix jordan_weyr_permutation(const Partition& jordan_sizes);

/// Pseudo-random complex matrix with the block pattern of the centralizer of
/// a basic Weyr matrix with structure w; entries are small Gaussian integers.
CMatrix weyr_centralizer_sample(const WeyrStructure& w, std::uint64_t seed);

} // namespace qrev
