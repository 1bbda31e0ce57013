#include "qrev/reversers.hpp"

#include "qrev/classify.hpp"
#include "qrev/errors.hpp"

#include <stdexcept>
#include <vector>

namespace qrev {

std::string to_string(Target t) { return t == Target::Inverse ? "inverse" : "neg-inverse"; }

std::string to_string(Flavor f)
{
    switch (f) {
    case Flavor::Involution: return "involution";
    case Flavor::SkewInvolution: return "skew-involution";
    case Flavor::General: return "general";
    }
    return "general";
}

std::string to_string(FlavorRequest f)
{
    switch (f) {
    case FlavorRequest::Any: return "any";
    case FlavorRequest::Involution: return "involution";
    case FlavorRequest::SkewInvolution: return "skew-involution";
    }
    return "any";
}

QMatrix target_matrix(const QMatrix& a, Target target)
{
    QMatrix inv = inverse(a);
    return target == Target::Inverse ? inv : -inv;
}

CertificateChecks check_certificate(const QMatrix& a, const QMatrix& g, Target target, Flavor flavor)
{
    CertificateChecks c;
    if (!g.is_square() || !a.is_square() || g.rows() != a.rows())
        return c;
    const Rational d = qdet(g);
    c.det_one = d == 1;
    if (sgn(d) != 0)
        c.residual_zero = conjugacy_residual(g, a, target_matrix(a, target)).is_zero();
    switch (flavor) {
    case Flavor::Involution: c.flavor_verified = is_involution(g); break;
    case Flavor::SkewInvolution: c.flavor_verified = is_skew_involution(g); break;
    case Flavor::General: c.flavor_verified = true; break;
    }
    return c;
}

namespace {

Certificate certify(const QMatrix& a, QMatrix g, Target target, Flavor flavor)
{
    Certificate cert{std::move(g), target, flavor, {}};
    cert.checks = check_certificate(a, cert.g, target, flavor);
    if (!cert.checks.all())
        throw std::logic_error("constructed reverser failed verification (residual " +
                               std::string(cert.checks.residual_zero ? "ok" : "nonzero") +
                               ", flavor " + (cert.checks.flavor_verified ? "ok" : "wrong") +
                               ", det " + (cert.checks.det_one ? "1" : "not 1") + ")");
    return cert;
}

QMatrix times_j(const CMatrix& m) { return scale_right(to_quaternion(m), Quaternion::j()); }

Rational binomial(int upper, int lower)
{
    if (lower < 0 || upper < 0 || lower > upper)
        return Rational(0);
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(upper), static_cast<unsigned long>(lower));
    return Rational(out);
}

long sign_power(int e) { return e % 2 == 0 ? 1 : -1; }

void require_unit(const GaussianRational& alpha)
{
    if (!is_unit_modulus(alpha))
        throw DomainError("eigenvalue " + to_string(alpha) + " is not of unit modulus");
}

// diag(I_n, j·I_n) g0 diag(I_n, −j·I_n): moves a reverser of J(λ)⊕J(λ⁻¹)
// to one of J(λ)⊕J(conj(λ⁻¹)), since j·J(μ)·j⁻¹ = J(conj μ).
QMatrix conjugate_second_half_by_j(const QMatrix& g0, int n)
{
    QMatrix d = QMatrix::identity(2 * n);
    QMatrix d_inv = QMatrix::identity(2 * n);
    for (int k = n; k < 2 * n; ++k) {
        d(k, k) = Quaternion::j();
        d_inv(k, k) = -Quaternion::j();
    }
    return d * g0 * d_inv;
}

// Reverser of J(λ,s) ⊕ J(rep(λ⁻¹),s) with target A⁻¹.
QMatrix inverse_pair_piece(const GaussianRational& lambda, int s, bool skew)
{
    const CMatrix om = omega(lambda, s);
    const CMatrix lower = skew ? -omega(inverse(lambda), s) : inverse(om);
    QMatrix g0 = to_quaternion(antidiag(om, lower));
    return lambda.is_real() ? g0 : conjugate_second_half_by_j(g0, s);
}

// P with P J(−λ⁻¹,n) P⁻¹ = −J(λ,n)⁻¹.
CMatrix neg_pair_conjugator(const GaussianRational& lambda, int n)
{
    const CMatrix m = -inverse(jordan_block(lambda, n));
    return inverse(single_block_conjugator(m, -inverse(lambda)));
}

QMatrix neg_pair_piece(const GaussianRational& lambda, int n, bool skew)
{
    const CMatrix p = neg_pair_conjugator(lambda, n);
    const CMatrix p_inv = inverse(p);
    return to_quaternion(antidiag(p, skew ? -p_inv : p_inv));
}

std::vector<int> block_indices(const JordanSpec& spec, std::size_t b)
{
    std::vector<int> idx;
    for (int k = 0; k < spec[b].size; ++k)
        idx.push_back(spec.offset(b) + k);
    return idx;
}

void scatter(QMatrix& g, const std::vector<int>& idx, const QMatrix& piece)
{
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c)
            g(idx[r], idx[c]) = piece(r, c);
}

std::string odd_unit_blocks(const JordanSpec& spec)
{
    std::string out;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        const auto& b = spec[i];
        if (!is_unit_modulus(b.eigenvalue) || b.eigenvalue.is_real())
            continue;
        int count = 0;
        for (const auto& o : spec.blocks())
            count += (o.eigenvalue == b.eigenvalue && o.size == b.size) ? 1 : 0;
        const std::string label = "J(" + to_string(b.eigenvalue) + "," + std::to_string(b.size) + ")";
        if (count % 2 == 1 && out.find(label) == std::string::npos)
            out += (out.empty() ? "" : ", ") + label + " x" + std::to_string(count);
    }
    return out;
}

} // namespace

CMatrix omega(const GaussianRational& lambda, int n)
{
    if (n < 1)
        throw SpecError("omega needs n >= 1");
    const GaussianRational inv1 = inverse(lambda);
    const GaussianRational inv2 = inv1 * inv1;
    CMatrix x(n, n);
    x(n - 1, n - 1) = GaussianRational(1);
    for (int i = n - 2; i >= 0; --i)
        for (int j = i; j <= n - 2; ++j)
            x(i, j) = -inv1 * x(i + 1, j) - inv2 * x(i + 1, j + 1);
    return x;
}

CMatrix omega_weyr(const GaussianRational& alpha, const Partition& p)
{
    require_unit(alpha);
    if (p.empty())
        throw SpecError("omega_weyr needs a nonempty partition");
    const WeyrStructure w = weyr_structure_of(p);
    const int d1 = p.largest();
    const GaussianRational alpha_bar = conj(alpha); // = α⁻¹
    CMatrix out(w.total(), w.total());
    // Block indices are 1-based to match the block formula.
    for (int i = 1; i <= d1; ++i)
        for (int j = i; j <= d1; ++j) {
            if (j == d1 && i != d1)
                continue;
            GaussianRational coef;
            if (i == j)
                coef = GaussianRational(sign_power(d1 - i)) * pow(alpha_bar, 2 * (d1 - i));
            else
                coef = GaussianRational(sign_power(d1 - i) * binomial(d1 - i - 1, j - i)) *
                       pow(alpha_bar, 2 * d1 - i - j);
            if (is_zero(coef))
                continue;
            const int r0 = w.offset(i - 1), c0 = w.offset(j - 1);
            for (int k = 0; k < w.sizes()[j - 1]; ++k)
                out(r0 + k, c0 + k) = coef;
        }
    return out;
}

QMatrix table1_matrix(const Table1Case& c)
{
    const GaussianRational& x = c.parameter;
    if (c.n < 1)
        throw SpecError("table case needs n >= 1");
    switch (c.row) {
    case 1:
        if (!(x == GaussianRational(1) || x == GaussianRational(-1)))
            throw SpecError("row 1 needs mu = +-1");
        return to_quaternion(jordan_block(x, c.n));
    case 2:
        if (is_zero(x) || sgn(x.im) < 0 || is_unit_modulus(x))
            throw SpecError("row 2 needs lambda != 0, Im >= 0, |lambda| != 1");
        return to_quaternion(direct_sum(jordan_block(x, c.n), jordan_block(inverse(x), c.n)));
    case 3:
    case 4: {
        if (!is_unit_modulus(x) || sgn(x.im) <= 0)
            throw SpecError("rows 3 and 4 need |alpha| = 1 and Im alpha > 0");
        const CMatrix jb = jordan_block(x, c.n);
        return to_quaternion(c.row == 3 ? jb : direct_sum(jb, jb));
    }
    default: throw SpecError("table row must be 1..4");
    }
}

Certificate table1_reverser(const Table1Case& c)
{
    const QMatrix a = table1_matrix(c);
    const CMatrix om = omega(c.parameter, c.n);
    switch (c.row) {
    case 1: return certify(a, to_quaternion(om), Target::Inverse, Flavor::Involution);
    case 2:
        return certify(a, to_quaternion(antidiag(om, inverse(om))), Target::Inverse,
                       Flavor::Involution);
    case 3: return certify(a, times_j(om), Target::Inverse, Flavor::SkewInvolution);
    default: {
        const QMatrix oj = times_j(om);
        return certify(a, antidiag(oj, inverse(oj)), Target::Inverse, Flavor::Involution);
    }
    }
}

Certificate skew_reverser_unit_block(const GaussianRational& alpha, int n)
{
    require_unit(alpha);
    const GaussianRational rep = class_rep(alpha);
    return certify(to_quaternion(jordan_block(rep, n)), times_j(omega(rep, n)), Target::Inverse,
                   Flavor::SkewInvolution);
}

Certificate skew_reverser_pair(const GaussianRational& lambda, int n)
{
    if (is_zero(lambda))
        throw DivisionByZero();
    if (is_unit_modulus(lambda))
        throw SpecError("skew_reverser_pair needs |lambda| != 1");
    const QMatrix a =
        to_quaternion(direct_sum(jordan_block(lambda, n), jordan_block(inverse(lambda), n)));
    const QMatrix g = to_quaternion(antidiag(omega(lambda, n), -omega(inverse(lambda), n)));
    return certify(a, g, Target::Inverse, Flavor::SkewInvolution);
}

CMatrix single_block_conjugator(const CMatrix& m, const GaussianRational& mu)
{
    if (!m.is_square() || m.rows() == 0)
        throw ShapeError("single_block_conjugator needs a nonempty square matrix");
    const std::size_t n = m.rows();
    CMatrix nil = m;
    for (std::size_t i = 0; i < n; ++i)
        nil(i, i) -= mu;
    if (rank(nil) != n - 1)
        throw NotSingleBlock("M - mu*I must have rank n-1");
    CMatrix power = CMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k)
        power = power * nil;
    if (!power.is_zero())
        throw NotSingleBlock("M has an eigenvalue other than mu");

    // (M − μI)^{n−1} ≠ 0 by the rank condition, so some standard vector
    // generates a full chain; prefer e_n.
    CMatrix top = CMatrix::identity(n);
    for (std::size_t k = 0; k + 1 < n; ++k)
        top = top * nil;
    std::size_t start = n - 1;
    auto column_nonzero = [&](std::size_t c) {
        for (std::size_t r = 0; r < n; ++r)
            if (!is_zero(top(r, c)))
                return true;
        return false;
    };
    if (!column_nonzero(start)) {
        start = 0;
        while (!column_nonzero(start))
            ++start;
    }
    // Columns of S: (M−μI)^{n−1}v, ..., (M−μI)v, v, so M S = S J(μ,n).
    CMatrix s(n, n);
    CMatrix v(n, 1);
    v(start, 0) = GaussianRational(1);
    for (std::size_t col = n; col-- > 0;) {
        for (std::size_t r = 0; r < n; ++r)
            s(r, col) = v(r, 0);
        v = nil * v;
    }
    return inverse(s);
}

Certificate neg_reverser_pair(const GaussianRational& lambda, int n)
{
    if (is_zero(lambda))
        throw DivisionByZero();
    const GaussianRational rep = class_rep(lambda);
    if (rep == GaussianRational::imag_unit())
        throw SpecError("lambda = i is its own minus-inverse partner; use neg_reverser_iota");
    const GaussianRational partner = class_rep_neg_inverse(rep);
    const QMatrix a = to_quaternion(direct_sum(jordan_block(rep, n), jordan_block(partner, n)));
    return certify(a, neg_pair_piece(rep, n, false), Target::NegInverse, Flavor::Involution);
}

CMatrix iota_reverser_recurrence(int n)
{
    if (n < 1)
        throw SpecError("iota reverser needs n >= 1");
    const GaussianRational iota = GaussianRational::imag_unit();
    CMatrix x(n, n);
    x(n - 1, n - 1) = GaussianRational(1);
    for (int i = n - 2; i >= 0; --i)
        for (int j = i; j <= n - 2; ++j)
            x(i, j) = iota * x(i + 1, j) - x(i + 1, j + 1);
    return x;
}

CMatrix iota_reverser_closed_form(int n)
{
    if (n < 1)
        throw SpecError("iota reverser needs n >= 1");
    const GaussianRational minus_iota(0, -1);
    CMatrix x(n, n);
    // 1-based indices as in the closed form.
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            if (j == n && i != n)
                continue;
            if (i == j)
                x(i - 1, j - 1) = GaussianRational(sign_power(n - i));
            else
                x(i - 1, j - 1) = GaussianRational(sign_power(n - i) * binomial(n - i - 1, j - i)) *
                                  pow(minus_iota, j - i);
        }
    return x;
}

Certificate neg_reverser_iota(int n)
{
    const CMatrix g = iota_reverser_recurrence(n);
    if (!(g == iota_reverser_closed_form(n)))
        throw std::logic_error("iota reverser recurrence and closed form disagree");
    return certify(to_quaternion(jordan_block(GaussianRational::imag_unit(), n)), to_quaternion(g),
                   Target::NegInverse, Flavor::Involution);
}

Certificate assemble_reverser(const JordanSpec& spec, Target target, FlavorRequest request)
{
    const int n = spec.dimension();
    const QMatrix a = jordan_matrix(spec);
    QMatrix g(n, n);
    Flavor flavor = Flavor::Involution;

    if (target == Target::Inverse) {
        const auto rev = reversible_pairing(spec);
        if (!rev)
            throw NotConstructible(
                "reversible",
                "Jordan blocks of " + to_string(spec) +
                    " cannot be split into pairs {J(l,s), J(1/l,s)} with |l| != 1 and "
                    "unit-modulus singletons");
        bool want_involution = request == FlavorRequest::Involution;
        const auto strong = strong_pairing(spec);
        if (request == FlavorRequest::Any)
            want_involution = strong.has_value();
        if (want_involution && !strong)
            throw NotConstructible("strongly-reversible",
                                   "no involution reverses " + to_string(spec) +
                                       ": non-real unit-modulus blocks with odd multiplicity: " +
                                       odd_unit_blocks(spec));
        flavor = want_involution ? Flavor::Involution : Flavor::SkewInvolution;
        const BlockPairing& pairing = want_involution ? *strong : *rev;
        const bool skew = !want_involution;
        for (const auto& [i, j] : pairing.pairs) {
            std::vector<int> idx = block_indices(spec, i);
            const std::vector<int> second = block_indices(spec, j);
            idx.insert(idx.end(), second.begin(), second.end());
            const GaussianRational& lambda = spec[i].eigenvalue;
            const int s = spec[i].size;
            if (is_unit_modulus(lambda)) {
                // Two equal non-real unit-modulus blocks, involution flavor.
                const QMatrix oj = times_j(omega(lambda, s));
                scatter(g, idx, antidiag(oj, inverse(oj)));
            } else {
                scatter(g, idx, inverse_pair_piece(lambda, s, skew));
            }
        }
        for (auto b : pairing.singletons) {
            const GaussianRational& mu = spec[b].eigenvalue;
            const CMatrix om = omega(mu, spec[b].size);
            scatter(g, block_indices(spec, b), skew ? times_j(om) : to_quaternion(om));
        }
    } else {
        const auto neg = neg_reversible_pairing(spec);
        if (!neg)
            throw NotConstructible(
                "neg-reversible",
                "Jordan blocks of " + to_string(spec) +
                    " cannot be split into pairs {J(l,s), J(-1/l,s)} and singletons J(i,t)");
        const bool skew = request == FlavorRequest::SkewInvolution;
        flavor = skew ? Flavor::SkewInvolution : Flavor::Involution;
        for (const auto& [i, j] : neg->pairs) {
            std::vector<int> idx = block_indices(spec, i);
            const std::vector<int> second = block_indices(spec, j);
            idx.insert(idx.end(), second.begin(), second.end());
            scatter(g, idx, neg_pair_piece(spec[i].eigenvalue, spec[i].size, skew));
        }
        for (auto b : neg->singletons) {
            // i·I commutes with the complex iota reverser, so g·i squares to −I.
            QMatrix piece = to_quaternion(iota_reverser_recurrence(spec[b].size));
            if (skew)
                piece = scale_right(piece, Quaternion::i());
            scatter(g, block_indices(spec, b), piece);
        }
    }
    return certify(a, std::move(g), target, flavor);
}

} // namespace qrev
