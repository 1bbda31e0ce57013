#pragma once

// Explicit conjugators taking a Jordan form A to A⁻¹ or to −A⁻¹, and their
// assembly over a whole JordanSpec.

#include "qrev/canonical.hpp"
#include "qrev/matrix.hpp"

#include <string>

namespace qrev {

enum class Target { Inverse, NegInverse };
enum class Flavor { Involution, SkewInvolution, General };
enum class FlavorRequest { Any, Involution, SkewInvolution };

std::string to_string(Target t);
std::string to_string(Flavor f);
std::string to_string(FlavorRequest f);

struct CertificateChecks {
    bool residual_zero = false;
    bool flavor_verified = false;
    bool det_one = false;

    bool all() const noexcept { return residual_zero && flavor_verified && det_one; }
};

/// A conjugator g with gAg⁻¹ = A⁻¹ (or −A⁻¹), its claimed flavor, and the
/// outcome of the exact checks made when it was built.
struct Certificate {
    QMatrix g;
    Target target = Target::Inverse;
    Flavor flavor = Flavor::General;
    CertificateChecks checks;
};

/// A⁻¹ or −A⁻¹.
QMatrix target_matrix(const QMatrix& a, Target target);

/// Recomputes residual, flavor and determinant checks from scratch.
CertificateChecks check_certificate(const QMatrix& a, const QMatrix& g, Target target, Flavor flavor);

/// Ω(λ,n): upper triangular, x_nn = 1, zero last column above the diagonal,
/// x_ij = −λ⁻¹ x_{i+1,j} − λ⁻² x_{i+1,j+1} for i ≤ j ≤ n−1.
CMatrix omega(const GaussianRational& lambda, int n);

/// Reverser Ω_W of the Weyr form of a single unit-modulus class with Jordan
/// block sizes p: τ = Ω_W·j satisfies τ A_W τ⁻¹ = A_W⁻¹.
/// Throws DomainError unless |α| = 1 exactly.
CMatrix omega_weyr(const GaussianRational& alpha, const Partition& p);

/// One row of the table of reversing symmetries for Jordan forms:
///   1: J(μ,n), μ = ±1                        g = Ω(μ,n)
///   2: J(λ,n) ⊕ J(λ⁻¹,n), |λ| ≠ 1, Im λ ≥ 0   g = [[0, Ω], [Ω⁻¹, 0]]
///   3: J(α,n), |α| = 1, Im α > 0             g = Ω(α,n)·j
///   4: J(α,n) ⊕ J(α,n), |α| = 1, Im α > 0     g = [[0, Ωj], [(Ωj)⁻¹, 0]]
/// Row 2 uses λ⁻¹ literally, not its class representative.
struct Table1Case {
    int row = 1;
    GaussianRational parameter;
    int n = 1;
};

/// The Jordan form A of a table row. Throws SpecError on a bad case.
QMatrix table1_matrix(const Table1Case& c);
Certificate table1_reverser(const Table1Case& c);

/// g = Ω(α,n)·j, a skew-involution reversing J(α,n) for any |α| = 1.
Certificate skew_reverser_unit_block(const GaussianRational& alpha, int n);
/// g = [[0, Ω(λ,n)], [−Ω(λ⁻¹,n), 0]], a skew-involution reversing
/// J(λ,n) ⊕ J(λ⁻¹,n) (λ⁻¹ literal). Throws SpecError if |λ| = 1.
Certificate skew_reverser_pair(const GaussianRational& lambda, int n);

/// P with P·M·P⁻¹ = J(μ,n), built from the Jordan chain of e_n (or of the
/// first standard vector that generates the chain).
/// Throws NotSingleBlock unless M − μI is nilpotent of rank n−1.
CMatrix single_block_conjugator(const CMatrix& m, const GaussianRational& mu);

/// Involution g = [[0, P], [P⁻¹, 0]] with g A g⁻¹ = −A⁻¹ for
/// A = J(λ,n) ⊕ J(−λ⁻¹,n), λ taken as its class representative.
/// Throws SpecError for λ = i.
Certificate neg_reverser_pair(const GaussianRational& lambda, int n);

/// The upper triangular involution g with g J(i,n) g⁻¹ = −J(i,n)⁻¹, filled
/// by x_ij = i·x_{i+1,j} − x_{i+1,j+1}.
CMatrix iota_reverser_recurrence(int n);
/// Same matrix from x_ij = (−1)^{n−i} C(n−i−1, j−i) (−i)^{j−i}.
CMatrix iota_reverser_closed_form(int n);
/// Builds both, checks they agree, and certifies against J(i,n).
Certificate neg_reverser_iota(int n);

/// Assembles a reverser for jordan_matrix(spec) from per-class pieces.
/// FlavorRequest::Any yields an involution when one exists, otherwise a
/// skew-involution. Throws NotConstructible when the classification for the
/// request is negative.
Certificate assemble_reverser(const JordanSpec& spec, Target target, FlavorRequest flavor);

} // namespace qrev
