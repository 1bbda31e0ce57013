#include "qrev/cli.hpp"

#include "qrev/errors.hpp"
#include "qrev/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace qrev {

namespace {

struct NumericFailure : Error {
    using Error::Error;
};

struct Options {
    std::string mode = "exact";
    NumericConfig numeric;
    std::string out_path;

    std::string jordan;
    std::string matrix;
    std::string certificate;
    std::string target = "inverse";
    std::string flavor = "any";
    std::string emit_matrix;
    std::string lambda;
    int n = 0;
    std::string partition;
    std::vector<std::string> candidates;
};

// A --jordan value names a file when one exists, otherwise it is inline text.
JordanSpec load_spec(const std::string& value)
{
    if (std::filesystem::is_regular_file(value))
        return spec_from_json(read_json_file(value));
    const auto first = value.find_first_not_of(" \t\n");
    if (first != std::string::npos && value[first] == '{')
        return spec_from_json(parse_json(value));
    return parse_spec_text(value);
}

json load_document(const std::string& path)
{
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return parse_json(buf.str());
    }
    return read_json_file(path);
}

void add_candidates(Options& opt)
{
    for (const auto& c : opt.candidates)
        opt.numeric.candidates.push_back(parse_gaussian(c));
}

struct Recovered {
    JordanSpec spec;
    json report;
};

json snap_report(const NumericSpec& ns)
{
    json snaps = json::array();
    for (const auto& s : ns.snaps)
        snaps.push_back({{"observed", {{"re", s.observed.real()}, {"im", s.observed.imag()}}},
                         {"value", to_json(s.value)},
                         {"snapped", s.snapped},
                         {"multiplicity", s.multiplicity}});
    return snaps;
}

// Jordan spec of a matrix document: recovered numerically and, in exact mode,
// re-derived from exact ranks.
Recovered recover_spec(const json& doc, const Options& opt)
{
    NumericSpec ns;
    try {
        ns = jordan_spec_numeric(float_matrix_from_json(doc), opt.numeric);
    } catch (const PairingError& e) {
        throw NumericFailure(e.what());
    } catch (const RankProfileError& e) {
        throw NumericFailure(e.what());
    } catch (const SingularError& e) {
        throw NumericFailure(e.what());
    }
    Recovered out{ns.spec, {{"approximate", ns.approximate}, {"snaps", snap_report(ns)}}};
    if (opt.mode == "exact") {
        if (!is_exact_matrix_json(doc))
            throw ParseError("exact mode needs rational string or integer entries; use --mode numeric");
        if (ns.approximate)
            throw NumericFailure("some eigenvalues are not exact rationals: " + to_string(ns.spec));
        try {
            out.spec = confirm_spec_exact(qmatrix_from_json(doc), ns.spec);
        } catch (const VerificationError& e) {
            throw NumericFailure(std::string("exact confirmation failed: ") + e.what());
        }
        out.report["exact_confirmed"] = true;
    }
    return out;
}

Recovered input_spec(const Options& opt)
{
    if (!opt.jordan.empty() && !opt.matrix.empty())
        throw ParseError("give either --jordan or --matrix, not both");
    if (!opt.jordan.empty())
        return {load_spec(opt.jordan), json::object()};
    if (opt.matrix.empty())
        throw ParseError("one of --jordan or --matrix is required");
    return recover_spec(load_document(opt.matrix), opt);
}

json cmd_classify(const Options& opt)
{
    Recovered r = input_spec(opt);
    json out = {{"spec", to_string(r.spec)}};
    json c = to_json(classify_psl(r.spec));
    for (auto& [k, v] : c.items())
        out[k] = v;
    for (auto& [k, v] : r.report.items())
        out[k] = v;
    if (out.contains("approximate") && out["approximate"].get<bool>())
        out["advisory"] = "eigenvalues were not snapped to exact values; classification is approximate";
    return out;
}

json cmd_certify(const Options& opt)
{
    Recovered r = input_spec(opt);
    if (r.report.contains("approximate") && r.report["approximate"].get<bool>())
        throw NumericFailure("cannot certify an approximate spec: " + to_string(r.spec));
    const Certificate cert = assemble_reverser(r.spec, target_from_string(opt.target),
                                               flavor_request_from_string(opt.flavor));
    if (!opt.emit_matrix.empty()) {
        std::ofstream f(opt.emit_matrix);
        if (!f)
            throw Error("cannot write " + opt.emit_matrix);
        f << to_json(jordan_matrix(r.spec)).dump(2) << '\n';
    }
    json out = to_json(cert);
    out["spec"] = to_string(r.spec);
    return out;
}

QMatrix load_exact_matrix(const std::string& path)
{
    if (path.empty())
        throw ParseError("--matrix is required");
    return qmatrix_from_json(load_document(path));
}

Certificate load_certificate(const std::string& path)
{
    if (path.empty())
        throw ParseError("--certificate is required");
    return certificate_from_json(load_document(path));
}

json cmd_verify(const Options& opt, int& code)
{
    const QMatrix a = load_exact_matrix(opt.matrix);
    const Certificate cert = load_certificate(opt.certificate);
    CertificateChecks checks;
    if (a.is_square() && cert.g.is_square() && a.rows() == cert.g.rows() && sgn(qdet(a)) != 0)
        checks = verify_certificate(a, cert);
    json out = to_json(checks);
    out["accepted"] = checks.all();
    code = checks.all() ? kExitOk : kExitVerification;
    return out;
}

json cmd_decompose(const Options& opt)
{
    const QMatrix a = load_exact_matrix(opt.matrix);
    const Certificate cert = load_certificate(opt.certificate);
    if (!a.is_square() || a.rows() != cert.g.rows() || !cert.g.is_square())
        throw VerificationError("certificate and matrix sizes differ");
    if (sgn(qdet(a)) == 0)
        throw VerificationError("matrix is singular");
    if (cert.target == Target::NegInverse)
        return to_json(product_involution_skew(a, cert));
    if (cert.flavor == Flavor::SkewInvolution)
        return to_json(product_two_skew_involutions(a, cert));
    return to_json(product_two_involutions(a, cert));
}

json cmd_omega(const Options& opt)
{
    if (opt.n < 1)
        throw ParseError("--n must be a positive integer");
    const GaussianRational lambda = parse_lambda(opt.lambda);
    if (is_zero(lambda))
        throw ParseError("lambda must be nonzero");
    return {{"lambda", to_json(lambda)}, {"n", opt.n}, {"omega", to_json(omega(lambda, opt.n))}};
}

json cmd_weyr(const Options& opt)
{
    const Partition p = parse_partition(opt.partition);
    const WeyrStructure w = weyr_structure_of(p);
    return {{"partition", to_string(p)},
            {"exponent_form", to_exponent_string(p)},
            {"conjugate", to_string(conjugate_partition(p))},
            {"weyr_structure", to_string(w)}};
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Reversibility of quaternion matrices: classify, certify, verify, factor"};
    app.require_subcommand(1);
    app.add_option("--mode", opt.mode, "exact or numeric")
        ->check(CLI::IsMember({"exact", "numeric"}));
    app.add_option("--rank-tol", opt.numeric.rank_tol, "relative singular value threshold");
    app.add_option("--eig-tol", opt.numeric.eig_cluster_tol, "eigenvalue clustering radius");
    app.add_option("--unit-tol", opt.numeric.unit_tol, "snapping distance to exact values");
    app.add_option("--snap", opt.candidates, "extra exact eigenvalue candidates, e.g. 3/5+4/5i");
    app.add_option("--out", opt.out_path, "write the JSON result here instead of stdout");

    auto* classify = app.add_subcommand("classify", "classify a Jordan spec or a matrix");
    auto* certify = app.add_subcommand("certify", "build a verified reverser certificate");
    for (auto* sub : {classify, certify}) {
        sub->add_option("--jordan", opt.jordan, "Jordan spec file or inline text [(i,5)]");
        sub->add_option("--matrix", opt.matrix, "matrix JSON file ('-' for stdin)");
    }
    certify->add_option("--target", opt.target, "inverse or neg-inverse")
        ->check(CLI::IsMember({"inverse", "neg-inverse"}));
    certify->add_option("--flavor", opt.flavor, "any, involution or skew-involution")
        ->check(CLI::IsMember({"any", "involution", "skew-involution"}));
    certify->add_option("--emit-matrix", opt.emit_matrix, "also write the certified Jordan matrix");

    auto* verify = app.add_subcommand("verify", "re-check a certificate against a matrix");
    auto* decompose = app.add_subcommand("decompose", "factor a matrix using a certificate");
    for (auto* sub : {verify, decompose}) {
        sub->add_option("--matrix", opt.matrix, "exact matrix JSON file")->required();
        sub->add_option("--certificate", opt.certificate, "certificate JSON file")->required();
    }

    auto* omega_cmd = app.add_subcommand("omega", "print the reverser of a single Jordan block");
    omega_cmd->add_option("--lambda", opt.lambda, "eigenvalue as \"re,im\" or 3/5+4/5i")->required();
    omega_cmd->add_option("--n", opt.n, "block size")->required();

    auto* weyr = app.add_subcommand("weyr", "conjugate partition and Weyr structure");
    weyr->add_option("--partition", opt.partition, "Jordan block sizes, e.g. 2,2,1")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    }

    int code = kExitOk;
    try {
        opt.numeric.validate();
        add_candidates(opt);
        if (opt.mode == "numeric" && verify->parsed())
            throw ParseError("verify is exact only");
        json result;
        if (classify->parsed())
            result = cmd_classify(opt);
        else if (certify->parsed())
            result = cmd_certify(opt);
        else if (verify->parsed())
            result = cmd_verify(opt, code);
        else if (decompose->parsed())
            result = cmd_decompose(opt);
        else if (omega_cmd->parsed())
            result = cmd_omega(opt);
        else
            result = cmd_weyr(opt);

        const std::string text = result.dump(2) + "\n";
        if (opt.out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(opt.out_path);
            if (!f)
                throw Error("cannot write " + opt.out_path);
            f << text;
        }
        return code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const SpecError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const NumericFailure& e) {
        err << "numeric recovery failed: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const NotConstructible& e) {
        err << "not constructible (" << e.criterion() << "): " << e.what() << '\n';
        return kExitNotConstructible;
    } catch (const FlavorError& e) {
        err << "flavor mismatch: " << e.what() << '\n';
        return kExitNotConstructible;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << '\n';
        return kExitVerification;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitOther;
    }
}

} // namespace qrev
