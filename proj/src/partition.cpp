#include "qrev/partition.hpp"

#include "qrev/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace qrev {

Partition Partition::from_parts(std::vector<int> parts)
{
    for (int x : parts)
        if (x <= 0)
            throw SpecError("partition parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    Partition p;
    for (int x : parts) {
        if (!p.exponents_.empty() && p.exponents_.back().part == x)
            ++p.exponents_.back().multiplicity;
        else
            p.exponents_.push_back({x, 1});
        p.total_ += x;
    }
    p.parts_ = std::move(parts);
    return p;
}

Partition Partition::from_exponents(std::vector<PartPower> exponents)
{
    std::vector<int> parts;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        const auto& e = exponents[i];
        if (e.part <= 0 || e.multiplicity < 1)
            throw SpecError("exponent form needs positive parts and multiplicities");
        if (i > 0 && exponents[i - 1].part <= e.part)
            throw SpecError("exponent form parts must be strictly decreasing");
        parts.insert(parts.end(), e.multiplicity, e.part);
    }
    return from_parts(std::move(parts));
}

Partition conjugate_by_count(const Partition& p)
{
    std::vector<int> dual;
    for (int j = 1; j <= p.largest(); ++j)
        dual.push_back(static_cast<int>(
            std::count_if(p.parts().begin(), p.parts().end(), [j](int n) { return n >= j; })));
    return Partition::from_parts(std::move(dual));
}

Partition conjugate_by_exponents(const Partition& p)
{
    const auto& e = p.exponents();
    std::vector<PartPower> dual;
    // Walk from the smallest part d_s upwards; the running sum of t's over
    // parts >= the current one gives each dual part.
    int running = std::accumulate(e.begin(), e.end(), 0,
                                  [](int acc, const PartPower& pp) { return acc + pp.multiplicity; });
    int below = 0;
    for (std::size_t idx = e.size(); idx-- > 0;) {
        dual.push_back({running, e[idx].part - below});
        below = e[idx].part;
        running -= e[idx].multiplicity;
    }
    return Partition::from_exponents(std::move(dual));
}

Partition conjugate_partition(const Partition& p)
{
    Partition by_count = conjugate_by_count(p);
    if (!(by_count == conjugate_by_exponents(p)))
        throw std::logic_error("conjugate partition formulas disagree for " + to_string(p));
    return by_count;
}

WeyrStructure::WeyrStructure(std::vector<int> sizes) : sizes_(std::move(sizes))
{
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (sizes_[i] <= 0)
            throw SpecError("Weyr structure sizes must be positive");
        if (i > 0 && sizes_[i] > sizes_[i - 1])
            throw SpecError("Weyr structure must be non-increasing");
    }
}

int WeyrStructure::total() const noexcept { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }

int WeyrStructure::offset(std::size_t i) const
{
    return std::accumulate(sizes_.begin(), sizes_.begin() + static_cast<std::ptrdiff_t>(i), 0);
}

WeyrStructure weyr_structure_of(const Partition& jordan_sizes)
{
    return WeyrStructure(conjugate_partition(jordan_sizes).parts());
}

Partition jordan_sizes_of(const WeyrStructure& w)
{
    return conjugate_partition(Partition::from_parts(w.sizes()));
}

namespace {

int parse_int(std::string_view s)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("malformed integer '" + std::string(s) + "' in partition");
    return v;
}

std::vector<std::string> split_commas(std::string_view s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

Partition parse_partition(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s.push_back(ch);
    if (s.empty())
        throw ParseError("empty partition");
    try {
        if (s.front() == '[') {
            if (s.back() != ']')
                throw ParseError("unterminated exponent form '" + s + "'");
            std::vector<PartPower> e;
            for (const auto& item : split_commas(std::string_view(s).substr(1, s.size() - 2))) {
                auto caret = item.find('^');
                if (caret == std::string::npos)
                    e.push_back({parse_int(item), 1});
                else
                    e.push_back({parse_int(std::string_view(item).substr(0, caret)),
                                 parse_int(std::string_view(item).substr(caret + 1))});
            }
            return Partition::from_exponents(std::move(e));
        }
        std::string_view body = s;
        if (body.front() == '(') {
            if (body.back() != ')')
                throw ParseError("unterminated partition '" + s + "'");
            body = body.substr(1, body.size() - 2);
        }
        std::vector<int> parts;
        for (const auto& item : split_commas(body))
            parts.push_back(parse_int(item));
        return Partition::from_parts(std::move(parts));
    } catch (const SpecError& e) {
        throw ParseError(e.what());
    }
}

std::string to_string(const Partition& p)
{
    std::string out = "(";
    for (std::size_t i = 0; i < p.parts().size(); ++i)
        out += (i ? "," : "") + std::to_string(p.parts()[i]);
    return out + ")";
}

std::string to_exponent_string(const Partition& p)
{
    std::string out = "[";
    for (std::size_t i = 0; i < p.exponents().size(); ++i) {
        const auto& e = p.exponents()[i];
        out += (i ? "," : "") + std::to_string(e.part) + "^" + std::to_string(e.multiplicity);
    }
    return out + "]";
}

std::string to_string(const WeyrStructure& w)
{
    std::string out = "(";
    for (std::size_t i = 0; i < w.sizes().size(); ++i)
        out += (i ? "," : "") + std::to_string(w.sizes()[i]);
    return out + ")";
}

} // namespace qrev
