#pragma once

// Factorizations A = s1·s2 read off from a verified reverser certificate.

#include "qrev/reversers.hpp"

namespace qrev {

struct Factorization {
    QMatrix s1;
    QMatrix s2;
    /// +1 when s1² = I, −1 when s1² = −I.
    int s1_square = 1;
    int s2_square = 1;
};

/// s1 = g, s2 = g·A, both involutions. Needs an inverse-target involution
/// certificate; throws FlavorError otherwise and VerificationError if the
/// certificate does not check out.
Factorization product_two_involutions(const QMatrix& a, const Certificate& cert);
/// s1 = −g, s2 = g·A, both squaring to −I.
Factorization product_two_skew_involutions(const QMatrix& a, const Certificate& cert);
/// s1 = −h⁻¹·A⁻¹ (skew-involution), s2 = h (involution), for an involution h
/// with h A h⁻¹ = −A⁻¹.
Factorization product_involution_skew(const QMatrix& a, const Certificate& cert);

/// Checks s1·s2 = A, s1² = s1_square·I and s2² = s2_square·I exactly.
bool check_factorization(const QMatrix& a, const Factorization& f);

/// Recomputes every certificate check from scratch.
CertificateChecks verify_certificate(const QMatrix& a, const Certificate& cert);

} // namespace qrev
