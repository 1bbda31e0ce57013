#include "qrev/numeric.hpp"

#include "qrev/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace qrev {

using cd = std::complex<double>;

void NumericConfig::validate() const
{
    for (double t : {rank_tol, eig_cluster_tol, unit_tol})
        if (!std::isfinite(t) || t < 0)
            throw DomainError("tolerances must be finite and non-negative");
    if (max_denominator < 1)
        throw DomainError("max_denominator must be positive");
}

FloatQMatrix::FloatQMatrix(std::size_t n)
    : a1_(Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n))),
      a2_(Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)))
{
}

FloatQMatrix::FloatQMatrix(Eigen::MatrixXcd a1, Eigen::MatrixXcd a2)
    : a1_(std::move(a1)), a2_(std::move(a2))
{
    if (a1_.rows() != a1_.cols() || a2_.rows() != a1_.rows() || a2_.cols() != a1_.cols())
        throw ShapeError("quaternion matrix parts must be square of equal size");
}

FloatQMatrix FloatQMatrix::from_exact(const QMatrix& a)
{
    if (!a.is_square())
        throw ShapeError("expected a square matrix, got " + shape_string(a));
    FloatQMatrix out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const Quaternion& q = a(r, c);
            out.set_entry(r, c, {q.a.get_d(), q.b.get_d(), q.c.get_d(), q.d.get_d()});
        }
    return out;
}

std::array<double, 4> FloatQMatrix::entry(std::size_t r, std::size_t c) const
{
    const cd z = a1_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    const cd w = a2_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    return {z.real(), z.imag(), w.real(), w.imag()};
}

void FloatQMatrix::set_entry(std::size_t r, std::size_t c, const std::array<double, 4>& q)
{
    a1_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = cd(q[0], q[1]);
    a2_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = cd(q[2], q[3]);
}

Eigen::MatrixXcd FloatQMatrix::phi() const
{
    const Eigen::Index n = a1_.rows();
    Eigen::MatrixXcd out(2 * n, 2 * n);
    out.topLeftCorner(n, n) = a1_;
    out.topRightCorner(n, n) = a2_;
    out.bottomLeftCorner(n, n) = -a2_.conjugate();
    out.bottomRightCorner(n, n) = a1_.conjugate();
    return out;
}

namespace {

struct Cluster {
    std::vector<cd> points;

    cd mean() const
    {
        return std::accumulate(points.begin(), points.end(), cd(0.0)) /
               static_cast<double>(points.size());
    }
    double spread() const
    {
        const cd m = mean();
        double s = 0.0;
        for (const cd& p : points)
            s = std::max(s, std::abs(p - m));
        return s;
    }
};

double diameter(const std::vector<cd>& pts)
{
    double d = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            d = std::max(d, std::abs(pts[i] - pts[j]));
    return d;
}

// A Jordan block of size k moves its eigenvalue by about δ^{1/k} under a
// perturbation of size δ, so the admissible cluster diameter grows with k.
class ClusterRadius {
public:
    ClusterRadius(double matrix_norm, double floor)
        : delta_(1e3 * std::numeric_limits<double>::epsilon() * std::max(matrix_norm, 1.0)),
          floor_(floor)
    {
    }
    double operator()(std::size_t k) const
    {
        const double r = 8.0 * std::pow(delta_, 1.0 / static_cast<double>(k));
        return std::max(floor_, std::min(r, kCap));
    }

    double cap() const { return std::max(floor_, kCap); }

private:
    static constexpr double kCap = 0.2;
    double delta_;
    double floor_;
};

// Connected components of the points joined by edges shorter than `limit`
// (or at most `limit` when inclusive).
std::vector<std::vector<cd>> components(const std::vector<cd>& pts, double limit, bool inclusive)
{
    const std::size_t n = pts.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = std::abs(pts[i] - pts[j]);
            if (inclusive ? d <= limit : d < limit)
                parent[find(i)] = find(j);
        }
    std::vector<std::vector<cd>> out;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        if (slot[r] == n) {
            slot[r] = out.size();
            out.emplace_back();
        }
        out[slot[r]].push_back(pts[i]);
    }
    return out;
}

// Longest edge of a minimum spanning tree: the smallest linkage distance at
// which the points are connected.
double longest_spanning_edge(const std::vector<cd>& pts)
{
    const std::size_t n = pts.size();
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    std::vector<bool> in_tree(n, false);
    best[0] = 0.0;
    double longest = 0.0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t u = n;
        for (std::size_t k = 0; k < n; ++k)
            if (!in_tree[k] && (u == n || best[k] < best[u]))
                u = k;
        in_tree[u] = true;
        longest = std::max(longest, best[u]);
        for (std::size_t k = 0; k < n; ++k)
            if (!in_tree[k])
                best[k] = std::min(best[k], std::abs(pts[u] - pts[k]));
    }
    return longest;
}

// Top-down single linkage: a component is accepted as one eigenvalue when its
// diameter fits the radius for its size, otherwise its longest spanning-tree
// edge is cut and both sides are examined again.
void split_into(std::vector<cd> pts, const ClusterRadius& radius, std::vector<Cluster>& out)
{
    if (pts.size() == 1 || diameter(pts) <= radius(pts.size())) {
        out.push_back({std::move(pts)});
        return;
    }
    for (auto& part : components(pts, longest_spanning_edge(pts), false))
        split_into(std::move(part), radius, out);
}

std::vector<Cluster> cluster_points(const std::vector<cd>& values, const ClusterRadius& radius)
{
    std::vector<Cluster> clusters;
    for (auto& part : components(values, radius.cap(), true))
        split_into(std::move(part), radius, clusters);
    return clusters;
}

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m)
{
    return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues();
}

long numeric_rank(const Eigen::MatrixXcd& m, double rel_tol)
{
    const Eigen::VectorXd s = singular_values(m);
    if (s.size() == 0 || s(0) == 0.0)
        return 0;
    long r = 0;
    for (Eigen::Index k = 0; k < s.size(); ++k)
        r += s(k) > rel_tol * s(0) ? 1 : 0;
    return r;
}

// Smallest-denominator rational within tol of x, if one with q ≤ max_den exists.
std::optional<Rational> nearby_rational(double x, double tol, long max_den)
{
    for (long q = 1; q <= max_den; ++q) {
        const double p = std::round(x * static_cast<double>(q));
        if (std::abs(x - p / static_cast<double>(q)) <= tol)
            return Rational(static_cast<long>(p), q);
    }
    return std::nullopt;
}

cd to_cd(const GaussianRational& z) { return {z.re.get_d(), z.im.get_d()}; }

// Approximation of an unsnapped value for the spec; exact binary value of the double.
GaussianRational from_double(cd z)
{
    return {Rational(z.real()), Rational(std::max(0.0, z.imag()))};
}

} // namespace

std::vector<EigenClass> phi_eigenvalues(const FloatQMatrix& a, const NumericConfig& cfg)
{
    cfg.validate();
    const Eigen::MatrixXcd phi = a.phi();
    if (phi.rows() == 0)
        return {};
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(phi, false);
    if (solver.info() != Eigen::Success)
        throw PairingError("eigenvalue computation did not converge");
    std::vector<cd> values(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(values.begin(), values.end(), [](cd x, cd y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });

    const ClusterRadius radius(singular_values(phi)(0), cfg.eig_cluster_tol);
    std::vector<Cluster> clusters = cluster_points(values, radius);

    std::vector<EigenClass> out;
    std::vector<bool> used(clusters.size(), false);
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        if (used[i])
            continue;
        used[i] = true;
        const Cluster& c = clusters[i];
        const cd m = c.mean();
        const double tol = radius(c.points.size());
        if (std::abs(m.imag()) <= tol) {
            if (c.points.size() % 2 != 0)
                throw PairingError("real eigenvalue cluster near " + std::to_string(m.real()) +
                                   " has odd size " + std::to_string(c.points.size()));
            out.push_back({cd(m.real(), 0.0), static_cast<int>(c.points.size() / 2), c.spread()});
            continue;
        }
        std::size_t partner = clusters.size();
        for (std::size_t j = 0; j < clusters.size(); ++j)
            if (!used[j] && clusters[j].points.size() == c.points.size() &&
                std::abs(clusters[j].mean() - std::conj(m)) <= tol) {
                partner = j;
                break;
            }
        if (partner == clusters.size())
            throw PairingError("no conjugate partner for eigenvalue cluster near (" +
                               std::to_string(m.real()) + ", " + std::to_string(m.imag()) + ")");
        used[partner] = true;
        const cd other = clusters[partner].mean();
        // Average the cluster with the reflection of its partner.
        const cd upper = 0.5 * (cd(m.real(), std::abs(m.imag())) +
                                cd(other.real(), std::abs(other.imag())));
        out.push_back({upper, static_cast<int>(c.points.size()),
                       std::max(c.spread(), clusters[partner].spread())});
    }
    std::sort(out.begin(), out.end(), [](const EigenClass& x, const EigenClass& y) {
        return x.value.real() != y.value.real() ? x.value.real() < y.value.real()
                                                : x.value.imag() < y.value.imag();
    });
    return out;
}

WeyrStructure weyr_structure_numeric(const FloatQMatrix& a, cd lambda, int multiplicity,
                                     const NumericConfig& cfg)
{
    cfg.validate();
    if (multiplicity < 1)
        throw RankProfileError("multiplicity must be positive");
    const bool real = lambda.imag() == 0.0;
    const int copies = real ? 2 : 1;
    const long expected = static_cast<long>(multiplicity) * copies;
    const Eigen::MatrixXcd phi = a.phi();
    const Eigen::Index n2 = phi.rows();
    Eigen::MatrixXcd cur = phi - lambda * Eigen::MatrixXcd::Identity(n2, n2);
    const double threshold = cfg.rank_tol * std::max(singular_values(cur)(0), 1.0);

    // Staircase reduction: with V unitary and its last columns spanning the
    // numerical kernel of C, V*CV = [[C', 0], [X, 0]] with [C'; X] of full
    // column rank, so dim ker C^{k+1} = dim ker C + dim ker C'^k. The kernel
    // dimensions of the successive C are the rank drops of the powers.
    std::vector<int> sizes;
    long found = 0;
    while (true) {
        long nullity = 0;
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd;
        if (cur.rows() > 0) {
            svd.compute(cur, Eigen::ComputeFullV);
            const Eigen::VectorXd sv = svd.singularValues();
            for (Eigen::Index k = 0; k < sv.size(); ++k)
                nullity += sv(k) <= threshold ? 1 : 0;
        }
        if (found == expected) {
            if (nullity != 0)
                throw RankProfileError("rank keeps dropping past multiplicity " +
                                       std::to_string(multiplicity));
            break;
        }
        const std::string where = "at power " + std::to_string(sizes.size() + 1);
        if (nullity == 0 || nullity % copies != 0 || found + nullity > expected)
            throw RankProfileError("inconsistent rank profile " + where + ": drop " +
                                   std::to_string(nullity) + " towards multiplicity " +
                                   std::to_string(multiplicity));
        const int size = static_cast<int>(nullity / copies);
        if (!sizes.empty() && size > sizes.back())
            throw RankProfileError("rank drops increase " + where);
        sizes.push_back(size);
        found += nullity;
        // Singular values are sorted decreasingly, so the kernel columns are last
        // and the range columns span the leading block.
        const Eigen::Index keep = cur.rows() - nullity;
        const Eigen::MatrixXcd v = svd.matrixV();
        const Eigen::MatrixXcd t = v.adjoint() * cur * v;
        cur = t.topLeftCorner(keep, keep);
    }
    return WeyrStructure(std::move(sizes));
}

std::optional<GaussianRational> snap_eigenvalue(cd z, const NumericConfig& cfg)
{
    std::vector<GaussianRational> candidates = {GaussianRational(1), GaussianRational(-1),
                                                GaussianRational::imag_unit()};
    for (const auto& c : cfg.candidates)
        candidates.push_back(class_rep(c));
    for (const auto& c : candidates)
        if (std::abs(to_cd(c) - z) <= cfg.unit_tol)
            return c;
    const auto re = nearby_rational(z.real(), cfg.unit_tol, cfg.max_denominator);
    const auto im = nearby_rational(z.imag(), cfg.unit_tol, cfg.max_denominator);
    if (!re || !im)
        return std::nullopt;
    const GaussianRational out(*re, *im);
    if (std::abs(to_cd(out) - z) > cfg.unit_tol)
        return std::nullopt;
    return out;
}

NumericSpec jordan_spec_numeric(const FloatQMatrix& a, const NumericConfig& cfg)
{
    cfg.validate();
    if (a.rows() == 0)
        throw ShapeError("empty matrix");
    const Eigen::VectorXd sv = singular_values(a.phi());
    if (sv(sv.size() - 1) <= cfg.rank_tol * sv(0))
        throw SingularError("matrix is numerically singular");

    NumericSpec out;
    std::vector<JordanBlock> blocks;
    for (const EigenClass& c : phi_eigenvalues(a, cfg)) {
        SnapRecord rec{c.value, {}, false, c.multiplicity};
        cd lambda = c.value;
        if (auto exact = snap_eigenvalue(c.value, cfg)) {
            rec.value = *exact;
            rec.snapped = true;
            lambda = to_cd(*exact);
        } else {
            rec.value = from_double(c.value);
            out.approximate = true;
        }
        const Partition sizes =
            jordan_sizes_of(weyr_structure_numeric(a, lambda, c.multiplicity, cfg));
        for (int s : sizes.parts())
            blocks.push_back({rec.value, s});
        out.snaps.push_back(std::move(rec));
    }
    out.spec = JordanSpec(std::move(blocks));
    return out;
}

Partition jordan_sizes_exact(const QMatrix& a, const GaussianRational& lambda)
{
    if (!a.is_square())
        throw ShapeError("expected a square matrix, got " + shape_string(a));
    const GaussianRational rep = class_rep(lambda);
    const int copies = rep.is_real() ? 2 : 1;
    CMatrix m = phi_embed(a);
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, i) -= rep;
    std::vector<int> sizes;
    std::size_t previous = m.rows();
    CMatrix power = CMatrix::identity(m.rows());
    while (true) {
        power = power * m;
        const std::size_t r = rank(power);
        const std::size_t d = previous - r;
        if (d == 0)
            break;
        sizes.push_back(static_cast<int>(d) / copies);
        previous = r;
    }
    if (sizes.empty())
        return Partition::from_parts({});
    return jordan_sizes_of(WeyrStructure(std::move(sizes)));
}

JordanSpec confirm_spec_exact(const QMatrix& a, const JordanSpec& guess)
{
    std::vector<JordanBlock> blocks;
    int total = 0;
    for (const auto& lambda : guess.eigenvalues()) {
        const Partition sizes = jordan_sizes_exact(a, lambda);
        if (sizes.empty())
            throw VerificationError(to_string(lambda) + " is not an eigenvalue");
        for (int s : sizes.parts()) {
            blocks.push_back({lambda, s});
            total += s;
        }
    }
    if (total != static_cast<int>(a.rows()))
        throw VerificationError("exact eigenvalues account for " + std::to_string(total) + " of " +
                                std::to_string(a.rows()) + " dimensions");
    return JordanSpec(std::move(blocks));
}

double phi_condition(const QMatrix& a)
{
    const Eigen::VectorXd s = singular_values(FloatQMatrix::from_exact(a).phi());
    if (s.size() == 0)
        return 1.0;
    const double lo = s(s.size() - 1);
    return lo == 0.0 ? std::numeric_limits<double>::infinity() : s(0) / lo;
}

} // namespace qrev
