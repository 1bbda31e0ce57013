#include "qrev/classify.hpp"

#include <functional>

namespace qrev {

namespace {

enum class Role { Singleton, Paired };

// Greedy matching over the canonically sorted blocks. `role` decides whether
// a block may stand alone; otherwise it must meet an unmatched block of equal
// size whose eigenvalue is `partner(λ)`.
std::optional<BlockPairing> match_blocks(
    const JordanSpec& spec, const std::function<Role(const GaussianRational&)>& role,
    const std::function<GaussianRational(const GaussianRational&)>& partner)
{
    BlockPairing out;
    std::vector<bool> used(spec.size(), false);
    for (std::size_t i = 0; i < spec.size(); ++i) {
        if (used[i])
            continue;
        used[i] = true;
        const auto& b = spec[i];
        if (role(b.eigenvalue) == Role::Singleton) {
            out.singletons.push_back(i);
            continue;
        }
        const GaussianRational want = partner(b.eigenvalue);
        std::size_t j = i + 1;
        while (j < spec.size() && (used[j] || spec[j].size != b.size || !(spec[j].eigenvalue == want)))
            ++j;
        if (j == spec.size())
            return std::nullopt;
        used[j] = true;
        out.pairs.emplace_back(i, j);
    }
    return out;
}

std::string block_label(const JordanSpec& spec, std::size_t i)
{
    return "J(" + to_string(spec[i].eigenvalue) + "," + std::to_string(spec[i].size) + ")";
}

} // namespace

std::string BlockPairing::describe(const JordanSpec& spec) const
{
    std::string out;
    for (const auto& [a, b] : pairs)
        out += (out.empty() ? "" : " ") + std::string("{") + block_label(spec, a) + ", " +
               block_label(spec, b) + "}";
    for (auto s : singletons)
        out += (out.empty() ? "" : " ") + std::string("{") + block_label(spec, s) + "}";
    return out;
}

std::optional<BlockPairing> reversible_pairing(const JordanSpec& spec)
{
    return match_blocks(
        spec,
        [](const GaussianRational& l) { return is_unit_modulus(l) ? Role::Singleton : Role::Paired; },
        [](const GaussianRational& l) { return class_rep_inverse(l); });
}

std::optional<BlockPairing> strong_pairing(const JordanSpec& spec)
{
    // Non-real unit-modulus blocks pair with an identical block, which is
    // the even-multiplicity condition per (class, size).
    return match_blocks(
        spec,
        [](const GaussianRational& l) {
            return is_unit_modulus(l) && l.is_real() ? Role::Singleton : Role::Paired;
        },
        [](const GaussianRational& l) { return is_unit_modulus(l) ? l : class_rep_inverse(l); });
}

std::optional<BlockPairing> neg_reversible_pairing(const JordanSpec& spec)
{
    const GaussianRational iota = GaussianRational::imag_unit();
    return match_blocks(
        spec, [&](const GaussianRational& l) { return l == iota ? Role::Singleton : Role::Paired; },
        [](const GaussianRational& l) { return class_rep_neg_inverse(l); });
}

bool is_reversible(const JordanSpec& spec) { return reversible_pairing(spec).has_value(); }
bool is_strongly_reversible(const JordanSpec& spec) { return strong_pairing(spec).has_value(); }
bool is_neg_reversible(const JordanSpec& spec) { return neg_reversible_pairing(spec).has_value(); }

Classification classify_psl(const JordanSpec& spec)
{
    Classification c;
    auto rev = reversible_pairing(spec);
    auto strong = strong_pairing(spec);
    auto neg = neg_reversible_pairing(spec);
    c.reversible = rev.has_value();
    c.strongly_reversible = strong.has_value();
    c.neg_reversible = neg.has_value();
    c.psl_reversible = c.reversible || c.neg_reversible;
    // In PSL every reversible element is strongly reversible: skew-involutions
    // of SL become involutions, and the minus-inverse branch always admits an
    // involution.
    c.psl_strongly_reversible = c.psl_reversible;
    if (strong)
        c.witness_pairing = "inverse (involution): " + strong->describe(spec);
    else if (rev)
        c.witness_pairing = "inverse: " + rev->describe(spec);
    else if (neg)
        c.witness_pairing = "neg-inverse: " + neg->describe(spec);
    else
        c.witness_pairing = "none";
    return c;
}

} // namespace qrev
