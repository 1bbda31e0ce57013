#pragma once

#include "qrev/canonical.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qrev {

/// A partition of the blocks of a JordanSpec (by index) into pairs and
/// singletons. Pairs are ordered (earlier index, later index).
struct BlockPairing {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> singletons;

    std::string describe(const JordanSpec& spec) const;
};

/// Pairs {J(λ,s), J(λ⁻¹,s)} for |λ| ≠ 1, unit-modulus blocks as singletons.
/// Empty when the spec is not reversible.
std::optional<BlockPairing> reversible_pairing(const JordanSpec& spec);
/// As reversible_pairing, but equal non-real unit-modulus blocks are paired
/// with each other; only ±1 blocks stay singletons. Empty unless strongly
/// reversible.
std::optional<BlockPairing> strong_pairing(const JordanSpec& spec);
/// Pairs {J(λ,s), J(−λ⁻¹,s)}, J(i,t) as singletons.
std::optional<BlockPairing> neg_reversible_pairing(const JordanSpec& spec);

bool is_reversible(const JordanSpec& spec);
bool is_strongly_reversible(const JordanSpec& spec);
bool is_neg_reversible(const JordanSpec& spec);

struct Classification {
    bool reversible = false;
    bool strongly_reversible = false;
    bool neg_reversible = false;
    bool psl_reversible = false;
    bool psl_strongly_reversible = false;
    std::string witness_pairing;
};

Classification classify_psl(const JordanSpec& spec);

} // namespace qrev
