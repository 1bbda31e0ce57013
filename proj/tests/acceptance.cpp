// Runs every acceptance criterion at its stated tolerance (exact equality
// for the algebraic checks) and prints one PASS/FAIL line per criterion.

#include "support.hpp"

#include "qrev/classify.hpp"
#include "qrev/decompose.hpp"
#include "qrev/errors.hpp"
#include "qrev/reversers.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace qrev;
using namespace qrev::test;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            if (pass)
                detail << "failed: ";
            else
                detail << "; ";
            detail << what;
            pass = false;
        }
    }
};

// Certificates produced by the sweeps, re-checked for qdet(g) = 1 in
// criterion 8.
std::vector<QMatrix> g_produced;

std::vector<JordanSpec> sweep_specs()
{
    std::vector<JordanSpec> out;
    for_each_spec(6, [&](const JordanSpec& s) { out.push_back(s); });
    return out;
}

const std::vector<JordanSpec>& sweep()
{
    static const std::vector<JordanSpec> specs = sweep_specs();
    return specs;
}

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int max) {
        if (rem == 0) {
            out.push_back(Partition::from_parts(cur));
            return;
        }
        for (int k = std::min(rem, max); k >= 1; --k) {
            cur.push_back(k);
            rec(rem - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// Parity criterion for an involutive reverser: reversible, and each
// non-real unit-modulus block J(α,s) occurs an even number of times.
bool parity_criterion(const JordanSpec& s)
{
    std::map<std::pair<std::string, int>, int> count;
    for (const auto& b : s.blocks())
        if (is_unit_modulus(b.eigenvalue) && !b.eigenvalue.is_real())
            ++count[{to_string(b.eigenvalue), b.size}];
    for (const auto& [k, c] : count)
        if (c % 2 != 0)
            return false;
    return is_reversible(s);
}

CMatrix printed(std::initializer_list<std::initializer_list<const char*>> rows)
{
    CMatrix out(rows.size(), rows.size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (const char* x : row)
            out(r, c++) = z(x);
        ++r;
    }
    return out;
}

Outcome criterion1()
{
    Outcome o;
    const CMatrix g = printed({{"1", "-3i", "-3", "i", "0"},
                               {"0", "-1", "2i", "1", "0"},
                               {"0", "0", "1", "-i", "0"},
                               {"0", "0", "0", "-1", "0"},
                               {"0", "0", "0", "0", "1"}});
    const CMatrix ga = printed({{"i", "4", "-6i", "4", "i"},
                                {"0", "-i", "-3", "3i", "1"},
                                {"0", "0", "i", "2", "-i"},
                                {"0", "0", "0", "-i", "-1"},
                                {"0", "0", "0", "0", "i"}});
    const CMatrix aig = printed({{"-i", "-4", "6i", "-4", "-i"},
                                 {"0", "i", "3", "-3i", "-1"},
                                 {"0", "0", "-i", "-2", "i"},
                                 {"0", "0", "0", "i", "1"},
                                 {"0", "0", "0", "0", "-i"}});
    const QMatrix a = to_quaternion(jordan_block(z("i"), 5));
    const Certificate c = neg_reverser_iota(5);
    o.require(c.g == to_quaternion(g), "g differs from the printed matrix");
    o.require(c.g * a == to_quaternion(ga), "g*A differs from the printed g*A");
    o.require(inverse(a) * c.g == to_quaternion(aig), "A^-1*g differs from the printed A^-1*g");
    o.require(is_involution(c.g), "g^2 != I");
    if (!o.pass) {
        const QMatrix got = c.g * a;
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t k = 0; k < 5; ++k)
                if (!(got(r, k) == Quaternion(ga(r, k))))
                    o.detail << " [g*A entry (" << r + 1 << "," << k + 1 << ") computed "
                             << got(r, k) << ", printed " << ga(r, k) << "]";
    }
    return o;
}

Outcome criterion2()
{
    Outcome o;
    std::mt19937_64 rng(20260001);
    int checks = 0;
    for (int t = 0; t < 50; ++t) {
        const GaussianRational l = random_nonzero_gaussian(rng);
        for (int n = 1; n <= 8; ++n) {
            const CMatrix om = omega(l, n);
            o.require(om * jordan_block(inverse(l), n) == inverse(jordan_block(l, n)) * om,
                      "Omega*J(1/l) != J(l)^-1*Omega for l=" + to_string(l));
            o.require(om * omega(inverse(l), n) == CMatrix::identity(n),
                      "Omega(l)*Omega(1/l) != I for l=" + to_string(l));
            ++checks;
        }
    }
    o.detail << checks << " (lambda, n) pairs";
    return o;
}

Outcome criterion3()
{
    Outcome o;
    int cases = 0;
    const std::vector<std::pair<int, std::vector<const char*>>> rows = {
        {1, {"1", "-1"}}, {2, {"2", "1+i"}}, {3, {"i", "3/5+4/5i"}}, {4, {"i", "3/5+4/5i"}}};
    for (const auto& [row, params] : rows)
        for (const char* p : params)
            for (int n = 1; n <= 6; ++n) {
                const Table1Case tc{row, z(p), n};
                const QMatrix a = table1_matrix(tc);
                const Certificate c = table1_reverser(tc);
                const std::string where =
                    "row " + std::to_string(row) + " param " + p + " n=" + std::to_string(n);
                o.require(conjugacy_residual(c.g, a, inverse(a)).is_zero(), "residual " + where);
                o.require(row == 3 ? is_skew_involution(c.g) : is_involution(c.g), "flavor " + where);
                o.require(qdet(c.g) == 1, "qdet " + where);
                g_produced.push_back(c.g);
                ++cases;
            }
    o.detail << cases << " table cases";
    return o;
}

Outcome criterion4()
{
    Outcome o;
    int reversible = 0;
    for (const JordanSpec& s : sweep()) {
        if (!is_reversible(s))
            continue;
        ++reversible;
        const QMatrix a = jordan_matrix(s);
        const Certificate c = assemble_reverser(s, Target::Inverse, FlavorRequest::SkewInvolution);
        const Factorization f = product_two_skew_involutions(a, c);
        o.require(is_skew_involution(f.s1) && is_skew_involution(f.s2) && f.s1 * f.s2 == a,
                  "factorization " + to_string(s));
        g_produced.push_back(c.g);
    }
    o.detail << reversible << " reversible specs of " << sweep().size();
    return o;
}

Outcome criterion5()
{
    Outcome o;
    int positive = 0;
    for (const JordanSpec& s : sweep()) {
        const bool parity = parity_criterion(s);
        o.require(parity == is_strongly_reversible(s), "classifier disagrees on " + to_string(s));
        if (!parity)
            continue;
        ++positive;
        const Certificate c = assemble_reverser(s, Target::Inverse, FlavorRequest::Involution);
        const QMatrix a = jordan_matrix(s);
        o.require(is_involution(c.g) && conjugacy_residual(c.g, a, inverse(a)).is_zero(),
                  "involution certificate " + to_string(s));
        g_produced.push_back(c.g);
    }
    // Negative control: reversers f*Omega*j with f a random invertible complex
    // upper-triangular Toeplitz matrix never square to I.
    std::mt19937_64 rng(20260005);
    const GaussianRational alpha = z("3/5+4/5i");
    int samples = 0;
    for (int n = 1; n <= 5; ++n) {
        const QMatrix a = to_quaternion(jordan_block(alpha, n));
        const QMatrix oj = scale_right(to_quaternion(omega(alpha, n)), Quaternion::j());
        for (int t = 0; t < 100; ++t) {
            std::vector<Quaternion> first(n);
            for (auto& x : first)
                x = Quaternion(random_gaussian(rng));
            while (is_zero(first[0]))
                first[0] = Quaternion(random_gaussian(rng));
            const QMatrix g = toeplitz_build(first) * oj;
            o.require(conjugacy_residual(g, a, inverse(a)).is_zero(), "coset sample is not a reverser");
            o.require(!is_involution(g), "coset sample squares to I for n=" + std::to_string(n));
            ++samples;
        }
    }
    o.detail << positive << " parity-positive specs, " << samples << " negative-control samples";
    return o;
}

Outcome criterion6()
{
    Outcome o;
    int neg = 0;
    for (const JordanSpec& s : sweep()) {
        const Classification c = classify_psl(s);
        o.require(c.psl_reversible == (c.reversible || c.neg_reversible) &&
                      c.psl_strongly_reversible == c.psl_reversible,
                  "projective classification " + to_string(s));
        if (!c.neg_reversible)
            continue;
        ++neg;
        const QMatrix a = jordan_matrix(s);
        const Certificate h = assemble_reverser(s, Target::NegInverse, FlavorRequest::Involution);
        o.require(is_involution(h.g) && conjugacy_residual(h.g, a, -inverse(a)).is_zero(),
                  "h for " + to_string(s));
        const Factorization f = product_involution_skew(a, h);
        o.require(f.s1 == -(inverse(h.g) * inverse(a)) && is_skew_involution(f.s1) &&
                      is_involution(f.s2) && f.s1 * f.s2 == a,
                  "factorization " + to_string(s));
        g_produced.push_back(h.g);
    }
    o.detail << neg << " neg-reversible specs of " << sweep().size();
    return o;
}

Outcome criterion7()
{
    Outcome o;
    std::mt19937_64 rng(20260007);
    for (int t = 0; t < 500; ++t) {
        std::uniform_int_distribution<int> total(1, 40);
        int remaining = total(rng);
        std::vector<int> parts;
        while (remaining > 0) {
            std::uniform_int_distribution<int> part(1, remaining);
            parts.push_back(part(rng));
            remaining -= parts.back();
        }
        const Partition p = Partition::from_parts(parts);
        o.require(conjugate_by_count(p) == conjugate_by_exponents(p), "closed form " + to_string(p));
        o.require(conjugate_by_count(conjugate_by_count(p)) == p, "involutive " + to_string(p));
    }
    int forms = 0;
    const GaussianRational l = z("1+i");
    for (int n = 1; n <= 8; ++n)
        for (const Partition& p : partitions_of(n)) {
            std::vector<JordanBlock> blocks;
            for (int s : p.parts())
                blocks.push_back({l, s});
            const CMatrix aj = to_complex(jordan_matrix(JordanSpec(blocks)));
            const CMatrix pm = jordan_weyr_permutation(p);
            o.require(pm * aj * inverse(pm) == basic_weyr_matrix(l, weyr_structure_of(p)),
                      "P*A_J*P^-1 for " + to_string(p));
            ++forms;
        }
    const std::vector<WeyrStructure> structures = {WeyrStructure({3, 2, 2, 1}), WeyrStructure({2, 2, 1}),
                                                   WeyrStructure({4, 1, 1}), WeyrStructure({1, 1, 1}),
                                                   WeyrStructure({3})};
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const WeyrStructure& w = structures[seed % structures.size()];
        const CMatrix wm = basic_weyr_matrix(l, w);
        const CMatrix k = weyr_centralizer_sample(w, seed);
        o.require(k * wm == wm * k, "centralizer sample " + std::to_string(seed));
    }
    const GaussianRational alpha = z("3/5+4/5i");
    int taus = 0;
    for (int n = 1; n <= 6; ++n)
        for (const Partition& p : partitions_of(n)) {
            const QMatrix aw = to_quaternion(basic_weyr_matrix(alpha, weyr_structure_of(p)));
            const QMatrix tau = scale_right(to_quaternion(omega_weyr(alpha, p)), Quaternion::j());
            o.require(tau * aw * inverse(tau) == inverse(aw), "tau for " + to_string(p));
            ++taus;
        }
    o.detail << "500 partitions, " << forms << " Jordan/Weyr pairs, 100 centralizer samples, "
             << taus << " tau checks";
    return o;
}

Outcome criterion8()
{
    Outcome o;
    std::mt19937_64 rng(20260008);
    for (int t = 0; t < 200; ++t) {
        const QMatrix a = random_qmatrix(rng, 3, 3, 2), b = random_qmatrix(rng, 3, 3, 2);
        const Rational da = qdet(a), db = qdet(b);
        o.require(sgn(da) >= 0 && sgn(db) >= 0, "negative qdet");
        o.require(qdet(a * b) == da * db, "qdet not multiplicative");
    }
    std::size_t bad = 0;
    for (const QMatrix& g : g_produced)
        bad += qdet(g) == 1 ? 0 : 1;
    o.require(bad == 0, std::to_string(bad) + " produced reversers with qdet != 1");
    o.require(!g_produced.empty(), "no reversers were produced");
    o.detail << "200 random pairs, " << g_produced.size() << " produced reversers";
    return o;
}

Outcome criterion9()
{
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    std::vector<JordanSpec> small;
    for_each_spec(5, [&](const JordanSpec& s) { small.push_back(s); });
    std::mt19937_64 rng(20260009);
    std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
    const NumericConfig defaults;
    int recovered = 0;
    for (int t = 0; t < 50; ++t) {
        const JordanSpec& s = small[pick(rng)];
        const QMatrix sm = random_conditioned(rng, static_cast<std::size_t>(s.dimension()), 1e3);
        const QMatrix a = sm * jordan_matrix(s) * inverse(sm);
        try {
            const NumericSpec got = jordan_spec_numeric(FloatQMatrix::from_exact(a), defaults);
            const bool ok = got.spec == s && !got.approximate;
            o.require(ok, to_string(s) + " recovered as " + to_string(got.spec));
            recovered += ok ? 1 : 0;
        } catch (const Error& e) {
            o.require(false, to_string(s) + ": " + e.what());
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(seconds < 10.0, "took " + std::to_string(seconds) + " s");
    o.detail << recovered << "/50 recovered in " << seconds << " s";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"1 iota reverser n=5 vs printed example", criterion1},
        {"2 Omega identities", criterion2},
        {"3 table sweep", criterion3},
        {"4 two skew-involutions on reversible sweep", criterion4},
        {"5 involution criterion both directions", criterion5},
        {"6 neg-inverse machinery and projective classes", criterion6},
        {"7 Weyr layer", criterion7},
        {"8 determinant layer", criterion8},
        {"9 numeric round trip", criterion9},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << " (" << o.detail.str()
                  << "; " << seconds << " s)" << std::endl;
        failures += o.pass ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
