#pragma once

// Integer partitions in parts form (n1 >= n2 >= ... >= nr) and exponent
// form [d1^t1, ..., ds^ts] with d1 > ... > ds, kept in sync.

#include <string>
#include <string_view>
#include <vector>

namespace qrev {

struct PartPower {
    int part;
    int multiplicity;

    friend bool operator==(const PartPower&, const PartPower&) = default;
};

class Partition {
public:
    Partition() = default;

    /// Parts in any order; sorted non-increasing. Throws SpecError on a
    /// non-positive part.
    static Partition from_parts(std::vector<int> parts);
    /// Throws SpecError unless parts are positive and strictly decreasing and
    /// every multiplicity is at least one.
    static Partition from_exponents(std::vector<PartPower> exponents);

    const std::vector<int>& parts() const noexcept { return parts_; }
    const std::vector<PartPower>& exponents() const noexcept { return exponents_; }
    int total() const noexcept { return total_; }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    bool empty() const noexcept { return parts_.empty(); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    std::vector<PartPower> exponents_;
    int total_ = 0;
};

/// Dual partition by counting: m_j = |{i : n_i >= j}|.
Partition conjugate_by_count(const Partition& p);
/// Dual partition from the exponent form:
/// [(t1+...+ts)^ds, (t1+...+t_{s-1})^(d_{s-1}-ds), ..., t1^(d1-d2)].
Partition conjugate_by_exponents(const Partition& p);
/// Computes both and throws std::logic_error if they disagree.
Partition conjugate_partition(const Partition& p);

/// Non-increasing block sizes (n1, ..., nr) of a basic Weyr matrix.
class WeyrStructure {
public:
    WeyrStructure() = default;
    /// Throws SpecError unless sizes are positive and non-increasing.
    explicit WeyrStructure(std::vector<int> sizes);

    const std::vector<int>& sizes() const noexcept { return sizes_; }
    std::size_t blocks() const noexcept { return sizes_.size(); }
    int total() const noexcept;
    /// Row offset of block i.
    int offset(std::size_t i) const;

    friend bool operator==(const WeyrStructure&, const WeyrStructure&) = default;

private:
    std::vector<int> sizes_;
};

/// Weyr structure dual to the Jordan block sizes of one eigenvalue.
WeyrStructure weyr_structure_of(const Partition& jordan_sizes);
/// Jordan block sizes recovered from a Weyr structure.
Partition jordan_sizes_of(const WeyrStructure& w);

/// Accepts "3,2,2", "(3,2,2)" or "[3^2,1^1]". Throws ParseError.
Partition parse_partition(std::string_view text);
/// "(3,2,2)".
std::string to_string(const Partition& p);
/// "[3^2,1^1]".
std::string to_exponent_string(const Partition& p);
std::string to_string(const WeyrStructure& w);

} // namespace qrev
