#pragma once

// Floating-point front end: recovers the Jordan spec of a quaternion matrix
// given in doubles from the spectrum and rank profiles of its complex
// adjoint Φ(A).

#include "qrev/canonical.hpp"
#include "qrev/matrix.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <optional>
#include <vector>

namespace qrev {

struct NumericConfig {
    /// Singular values at most rank_tol·σ_max count as zero.
    double rank_tol = 1e-9;
    /// Minimum clustering radius for eigenvalues of Φ(A).
    double eig_cluster_tol = 1e-8;
    /// Snapping distance to exact candidates (also decides |λ| = 1).
    double unit_tol = 1e-8;
    /// Extra exact snapping candidates besides ±1 and i.
    std::vector<GaussianRational> candidates;
    /// Largest denominator tried when snapping to a nearby rational.
    long max_denominator = 64;

    /// Throws DomainError if a tolerance is negative or not finite.
    void validate() const;
};

/// A = A1 + A2·j with complex double blocks.
class FloatQMatrix {
public:
    FloatQMatrix() = default;
    explicit FloatQMatrix(std::size_t n);
    FloatQMatrix(Eigen::MatrixXcd a1, Eigen::MatrixXcd a2);

    static FloatQMatrix from_exact(const QMatrix& a);

    std::size_t rows() const noexcept { return static_cast<std::size_t>(a1_.rows()); }
    /// Entry (r, c) as its four real coordinates.
    std::array<double, 4> entry(std::size_t r, std::size_t c) const;
    void set_entry(std::size_t r, std::size_t c, const std::array<double, 4>& q);

    const Eigen::MatrixXcd& complex_part() const noexcept { return a1_; }
    const Eigen::MatrixXcd& j_part() const noexcept { return a2_; }
    Eigen::MatrixXcd phi() const;

private:
    Eigen::MatrixXcd a1_;
    Eigen::MatrixXcd a2_;
};

/// One similarity class of right eigenvalues found in the spectrum of Φ(A).
struct EigenClass {
    /// Mean of the cluster, imaginary part ≥ 0.
    std::complex<double> value;
    /// Algebraic multiplicity as a quaternionic eigenvalue.
    int multiplicity = 0;
    /// Largest distance from the mean within the cluster(s).
    double spread = 0.0;
};

/// Clusters the eigenvalues of Φ(A) and pairs z with conj(z).
/// Throws PairingError when the spectrum does not pair up.
std::vector<EigenClass> phi_eigenvalues(const FloatQMatrix& a, const NumericConfig& cfg);

/// Weyr structure of the class of λ from singular-value rank profiles of
/// (Φ(A) − λI)^k. Throws RankProfileError on an inconsistent profile.
WeyrStructure weyr_structure_numeric(const FloatQMatrix& a, std::complex<double> lambda,
                                     int multiplicity, const NumericConfig& cfg);

struct SnapRecord {
    std::complex<double> observed;
    GaussianRational value;
    bool snapped = false;
    int multiplicity = 0;
};

struct NumericSpec {
    JordanSpec spec;
    /// True when some eigenvalue could not be snapped to an exact value; the
    /// spec then carries rational approximations.
    bool approximate = false;
    std::vector<SnapRecord> snaps;
};

/// Exact value within cfg.unit_tol of z, if any: first the candidate set,
/// then rationals with denominator at most cfg.max_denominator.
std::optional<GaussianRational> snap_eigenvalue(std::complex<double> z, const NumericConfig& cfg);

/// Throws SingularError if A is numerically singular, PairingError or
/// RankProfileError on ill-conditioned input.
NumericSpec jordan_spec_numeric(const FloatQMatrix& a, const NumericConfig& cfg);

/// Exact block sizes of the class of λ in an exact matrix, from exact ranks
/// of (Φ(A) − λI)^k.
Partition jordan_sizes_exact(const QMatrix& a, const GaussianRational& lambda);

/// Re-derives the block sizes of every eigenvalue of `guess` exactly and
/// checks they account for the whole dimension. Throws VerificationError
/// otherwise.
JordanSpec confirm_spec_exact(const QMatrix& a, const JordanSpec& guess);

/// Condition number σ_max/σ_min of Φ(A).
double phi_condition(const QMatrix& a);

} // namespace qrev
