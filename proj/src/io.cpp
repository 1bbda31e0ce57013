#include "qrev/io.hpp"

#include "qrev/errors.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace qrev {

namespace {

std::string strip(std::string_view text)
{
    std::string out;
    for (std::size_t k = 0; k < text.size(); ++k) {
        const unsigned char ch = static_cast<unsigned char>(text[k]);
        if (std::isspace(ch) || ch == '*')
            continue;
        // U+00B7 middle dot.
        if (ch == 0xC2 && k + 1 < text.size() && static_cast<unsigned char>(text[k + 1]) == 0xB7) {
            ++k;
            continue;
        }
        out.push_back(static_cast<char>(ch));
    }
    return out;
}

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int int_field(const json& j, const char* key)
{
    const json& v = field(j, key);
    if (!v.is_number_integer())
        throw ParseError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

} // namespace

json parse_json(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw ParseError("expected a rational string or integer, got " + j.dump());
}

GaussianRational parse_gaussian(std::string_view text)
{
    const std::string s = strip(text);
    if (s.empty())
        throw ParseError("empty complex number");
    if (s.back() != 'i')
        return GaussianRational(parse_rational(s));
    const std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    const std::string re = split == std::string::npos ? "" : body.substr(0, split);
    const std::string im = split == std::string::npos ? body : body.substr(split);
    Rational im_value;
    if (im.empty() || im == "+")
        im_value = 1;
    else if (im == "-")
        im_value = -1;
    else
        im_value = parse_rational(im);
    return {re.empty() ? Rational(0) : parse_rational(re), im_value};
}

GaussianRational parse_lambda(std::string_view text)
{
    const std::string s = strip(text);
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        return parse_gaussian(s);
    return {parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1))};
}

json to_json(const GaussianRational& z) { return {{"re", to_json(z.re)}, {"im", to_json(z.im)}}; }

GaussianRational gaussian_from_json(const json& j)
{
    if (j.is_string())
        return parse_gaussian(j.get<std::string>());
    if (j.is_number_integer())
        return GaussianRational(j.get<long>());
    return {rational_from_json(field(j, "re")), rational_from_json(field(j, "im"))};
}

json to_json(const Quaternion& q)
{
    return json::array({to_json(q.a), to_json(q.b), to_json(q.c), to_json(q.d)});
}

Quaternion quaternion_from_json(const json& j)
{
    if (j.is_string() || j.is_number_integer())
        return Quaternion(rational_from_json(j));
    if (!j.is_array() || j.size() != 4)
        throw ParseError("quaternion must be [a, b, c, d], got " + j.dump());
    return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]),
            rational_from_json(j[3])};
}

namespace {

template <class M, class F>
json matrix_json(const M& m, F&& entry)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(entry(r, c));
        rows.push_back(std::move(row));
    }
    return {{"n", m.rows()}, {"m", m.cols()}, {"entries", std::move(rows)}};
}

// Validated shape of a matrix document: rows × cols of entries.
std::pair<std::size_t, std::size_t> matrix_shape(const json& j)
{
    const json& entries = field(j, "entries");
    if (!entries.is_array())
        throw ParseError("'entries' must be an array of rows");
    const int n = int_field(j, "n");
    const int m = j.contains("m") ? int_field(j, "m") : n;
    if (n < 0 || m < 0 || entries.size() != static_cast<std::size_t>(n))
        throw ParseError("'entries' does not have n rows");
    for (const auto& row : entries)
        if (!row.is_array() || row.size() != static_cast<std::size_t>(m))
            throw ParseError("matrix row does not have m entries");
    return {static_cast<std::size_t>(n), static_cast<std::size_t>(m)};
}

bool exact_scalar(const json& v) { return v.is_string() || v.is_number_integer(); }

} // namespace

json to_json(const QMatrix& m)
{
    return matrix_json(m, [&](std::size_t r, std::size_t c) { return to_json(m(r, c)); });
}

json to_json(const CMatrix& m) { return to_json(to_quaternion(m)); }

QMatrix qmatrix_from_json(const json& j)
{
    const auto [n, m] = matrix_shape(j);
    QMatrix out(n, m);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < m; ++c)
            out(r, c) = quaternion_from_json(j["entries"][r][c]);
    return out;
}

json to_json(const FloatQMatrix& m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.rows(); ++c) {
            const auto q = m.entry(r, c);
            row.push_back(json::array({q[0], q[1], q[2], q[3]}));
        }
        rows.push_back(std::move(row));
    }
    return {{"n", m.rows()}, {"entries", std::move(rows)}};
}

FloatQMatrix float_matrix_from_json(const json& j)
{
    const auto [n, m] = matrix_shape(j);
    if (n != m)
        throw ParseError("matrix must be square");
    auto scalar = [](const json& v) {
        if (v.is_number())
            return v.get<double>();
        if (v.is_string())
            return parse_rational(v.get<std::string>()).get_d();
        throw ParseError("expected a number, got " + v.dump());
    };
    FloatQMatrix out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const json& e = j["entries"][r][c];
            if (e.is_array()) {
                if (e.size() != 4)
                    throw ParseError("quaternion must be [a, b, c, d], got " + e.dump());
                out.set_entry(r, c, {scalar(e[0]), scalar(e[1]), scalar(e[2]), scalar(e[3])});
            } else {
                out.set_entry(r, c, {scalar(e), 0.0, 0.0, 0.0});
            }
        }
    return out;
}

bool is_exact_matrix_json(const json& j)
{
    matrix_shape(j);
    for (const auto& row : j["entries"])
        for (const auto& e : row) {
            if (e.is_array()) {
                for (const auto& v : e)
                    if (!exact_scalar(v))
                        return false;
            } else if (!exact_scalar(e)) {
                return false;
            }
        }
    return true;
}

JordanSpec parse_spec_text(std::string_view text)
{
    const std::string s = strip(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("Jordan spec must look like [(lambda,size), ...]");
    std::vector<JordanBlock> blocks;
    std::size_t pos = 1;
    const std::size_t end = s.size() - 1;
    while (pos < end) {
        if (s[pos] == ',' && !blocks.empty())
            ++pos;
        if (pos >= end || s[pos] != '(')
            throw ParseError("expected '(' at offset " + std::to_string(pos) + " in " + s);
        const auto close = s.find(')', pos);
        if (close == std::string::npos || close > end)
            throw ParseError("unbalanced parenthesis in " + s);
        const std::string item = s.substr(pos + 1, close - pos - 1);
        const auto comma = item.rfind(',');
        if (comma == std::string::npos)
            throw ParseError("block '" + item + "' needs a size");
        const std::string size_text = item.substr(comma + 1);
        if (size_text.empty() || size_text.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad block size '" + size_text + "'");
        blocks.push_back({parse_gaussian(item.substr(0, comma)), std::stoi(size_text)});
        pos = close + 1;
    }
    try {
        return JordanSpec(std::move(blocks));
    } catch (const SpecError& e) {
        throw ParseError(e.what());
    }
}

json to_json(const JordanSpec& spec)
{
    json blocks = json::array();
    for (const auto& b : spec.blocks())
        blocks.push_back({{"re", to_json(b.eigenvalue.re)},
                          {"im", to_json(b.eigenvalue.im)},
                          {"size", b.size}});
    return {{"blocks", std::move(blocks)}};
}

JordanSpec spec_from_json(const json& j)
{
    if (j.is_string())
        return parse_spec_text(j.get<std::string>());
    const json& blocks = field(j, "blocks");
    if (!blocks.is_array())
        throw ParseError("'blocks' must be an array");
    std::vector<JordanBlock> out;
    for (const auto& b : blocks)
        out.push_back({gaussian_from_json(b), int_field(b, "size")});
    try {
        return JordanSpec(std::move(out));
    } catch (const SpecError& e) {
        throw ParseError(e.what());
    }
}

json to_json(const CertificateChecks& c)
{
    return {{"residual_zero", c.residual_zero},
            {"flavor_verified", c.flavor_verified},
            {"det_one", c.det_one}};
}

json to_json(const Certificate& cert)
{
    return {{"target", to_string(cert.target)},
            {"flavor", to_string(cert.flavor)},
            {"g", to_json(cert.g)},
            {"checks", to_json(cert.checks)}};
}

Target target_from_string(std::string_view s)
{
    if (s == "inverse")
        return Target::Inverse;
    if (s == "neg-inverse")
        return Target::NegInverse;
    throw ParseError("unknown target '" + std::string(s) + "'");
}

Flavor flavor_from_string(std::string_view s)
{
    if (s == "involution")
        return Flavor::Involution;
    if (s == "skew-involution")
        return Flavor::SkewInvolution;
    if (s == "general")
        return Flavor::General;
    throw ParseError("unknown flavor '" + std::string(s) + "'");
}

FlavorRequest flavor_request_from_string(std::string_view s)
{
    if (s == "any")
        return FlavorRequest::Any;
    if (s == "involution")
        return FlavorRequest::Involution;
    if (s == "skew-involution")
        return FlavorRequest::SkewInvolution;
    throw ParseError("unknown flavor '" + std::string(s) + "'");
}

Certificate certificate_from_json(const json& j)
{
    auto text = [&](const char* key) {
        const json& v = field(j, key);
        if (!v.is_string())
            throw ParseError(std::string("field '") + key + "' must be a string");
        return v.get<std::string>();
    };
    Certificate cert;
    cert.target = target_from_string(text("target"));
    cert.flavor = flavor_from_string(text("flavor"));
    cert.g = qmatrix_from_json(field(j, "g"));
    // Recorded checks are informational only; they are never trusted.
    return cert;
}

json to_json(const Factorization& f)
{
    auto sq = [](int s) { return s > 0 ? "+I" : "-I"; };
    return {{"s1", to_json(f.s1)},
            {"s2", to_json(f.s2)},
            {"s1_square", sq(f.s1_square)},
            {"s2_square", sq(f.s2_square)}};
}

json to_json(const Classification& c)
{
    return {{"reversible", c.reversible},
            {"strongly_reversible", c.strongly_reversible},
            {"neg_reversible", c.neg_reversible},
            {"psl_reversible", c.psl_reversible},
            {"psl_strongly_reversible", c.psl_strongly_reversible},
            {"witness_pairing", c.witness_pairing}};
}

} // namespace qrev
