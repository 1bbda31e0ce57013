#pragma once

// JSON and text forms of the library's values. Exact numbers are written as
// strings ("p/q") so they survive any JSON reader unchanged.

#include "qrev/canonical.hpp"
#include "qrev/classify.hpp"
#include "qrev/decompose.hpp"
#include "qrev/numeric.hpp"
#include "qrev/reversers.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace qrev {

using json = nlohmann::ordered_json;

/// Parses JSON text; throws ParseError on malformed input.
json parse_json(std::string_view text);
/// Reads and parses a file; throws ParseError if unreadable or malformed.
json read_json_file(const std::string& path);

json to_json(const Rational& x);
/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const json& j);

/// Accepts "3/5+4/5i", "i", "-i", "1-i", "2" (spaces, '*' and '·' ignored).
GaussianRational parse_gaussian(std::string_view text);
/// Also accepts the pair form "re,im".
GaussianRational parse_lambda(std::string_view text);
json to_json(const GaussianRational& z);
GaussianRational gaussian_from_json(const json& j);

json to_json(const Quaternion& q);
Quaternion quaternion_from_json(const json& j);

json to_json(const QMatrix& m);
json to_json(const CMatrix& m);
QMatrix qmatrix_from_json(const json& j);

/// {"n": n, "entries": [[[a,b,c,d], ...], ...]} with doubles.
json to_json(const FloatQMatrix& m);
/// Entries may be numbers or exact rational strings.
FloatQMatrix float_matrix_from_json(const json& j);
/// True when every entry of a matrix document is an exact string or integer.
bool is_exact_matrix_json(const json& j);

/// Inline form "[(i,5), (3/5+4/5i,1)]".
JordanSpec parse_spec_text(std::string_view text);
json to_json(const JordanSpec& spec);
/// Accepts {"blocks": [{"re", "im", "size"}, ...]} or an inline string.
JordanSpec spec_from_json(const json& j);

json to_json(const CertificateChecks& c);
json to_json(const Certificate& cert);
Certificate certificate_from_json(const json& j);
Target target_from_string(std::string_view s);
Flavor flavor_from_string(std::string_view s);
FlavorRequest flavor_request_from_string(std::string_view s);

json to_json(const Factorization& f);
json to_json(const Classification& c);

} // namespace qrev
