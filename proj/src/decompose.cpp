#include "qrev/decompose.hpp"

#include "qrev/errors.hpp"

namespace qrev {

namespace {

void require(const QMatrix& a, const Certificate& cert, Target target, Flavor flavor)
{
    if (cert.target != target || cert.flavor != flavor)
        throw FlavorError("need a " + to_string(target) + " " + to_string(flavor) +
                          " certificate, got " + to_string(cert.target) + " " +
                          to_string(cert.flavor));
    const CertificateChecks c = check_certificate(a, cert.g, target, flavor);
    if (!c.all())
        throw VerificationError("certificate does not verify against the matrix");
}

bool squares_to(const QMatrix& s, int sign)
{
    return sign > 0 ? is_involution(s) : is_skew_involution(s);
}

Factorization checked(const QMatrix& a, Factorization f)
{
    if (!check_factorization(a, f))
        throw VerificationError("factorization identities failed");
    return f;
}

} // namespace

Factorization product_two_involutions(const QMatrix& a, const Certificate& cert)
{
    require(a, cert, Target::Inverse, Flavor::Involution);
    return checked(a, {cert.g, cert.g * a, 1, 1});
}

Factorization product_two_skew_involutions(const QMatrix& a, const Certificate& cert)
{
    require(a, cert, Target::Inverse, Flavor::SkewInvolution);
    return checked(a, {-cert.g, cert.g * a, -1, -1});
}

Factorization product_involution_skew(const QMatrix& a, const Certificate& cert)
{
    require(a, cert, Target::NegInverse, Flavor::Involution);
    // h² = I, so h⁻¹ = h.
    return checked(a, {-(cert.g * inverse(a)), cert.g, -1, 1});
}

bool check_factorization(const QMatrix& a, const Factorization& f)
{
    return f.s1 * f.s2 == a && squares_to(f.s1, f.s1_square) && squares_to(f.s2, f.s2_square);
}

CertificateChecks verify_certificate(const QMatrix& a, const Certificate& cert)
{
    return check_certificate(a, cert.g, cert.target, cert.flavor);
}

} // namespace qrev
