#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "momcert/chebyshev.hpp"
#include "momcert/decomp.hpp"
#include "momcert/instance.hpp"
#include "momcert/json_io.hpp"
#include "momcert/moments.hpp"
#include "momcert/verify.hpp"
#include "poly_expr.hpp"

namespace momcert::cli {

namespace {

constexpr const char* kPolyHelp =
    "Polynomial: an expression in z (presets such as \"z-1\", \"z+1\", \"z^2+z-2\", \"z^2-1\"; "
    "any sum of terms like \"3/2*z^4 - z + 7\") or a JSON polynomial object";

RationalPoly poly_argument(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\n");
    if (first != std::string::npos && text[first] == '{') return rational_poly_from_json(parse_json_text(text));
    return parse_poly_expr(text);
}

std::pair<unsigned, unsigned> roots_argument(const std::string& text) {
    unsigned j = 0, l = 0;
    char comma = 0;
    std::istringstream ss(text);
    if (!(ss >> j >> comma >> l) || comma != ',' || !(ss >> std::ws).eof()) {
        throw std::invalid_argument("--roots expects \"j,l\", got '" + text + "'");
    }
    return {j, l};
}

std::string read_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    std::ifstream file(path);
    if (!file) throw FormatError("cannot open input file '" + path + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void emit(const Json& doc, const std::string& output, std::ostream& out) {
    if (output.empty() || output == "-") {
        out << doc.dump(2) << '\n';
        return;
    }
    std::ofstream file(output);
    if (!file) throw std::runtime_error("cannot open output file '" + output + "'");
    file << doc.dump(2) << '\n';
}

struct Options {
    std::string output;
    std::string input;

    unsigned m = 0;
    unsigned n = 0;
    std::string r;
    std::string c = "1";
    std::string roots = "0,1";
    std::string outer;

    std::size_t max_moment = 20;
    bool numeric = false;
    double tol = 1e-6;

    unsigned cheby_k = 0;
};

int cmd_gen_power(const Options& o, std::ostream& out) {
    PowerCaseParams params;
    params.m = o.m;
    params.n = o.n;
    params.r = poly_argument(o.r);
    params.c = Rational::parse(o.c);
    params.roots = roots_argument(o.roots);
    if (!o.outer.empty()) params.outer = poly_argument(o.outer);
    emit(to_json(build_power_case(params)), o.output, out);
    return kExitOk;
}

int cmd_gen_cheby(const Options& o, std::ostream& out) {
    ChebyCaseParams params{o.n, o.m, std::nullopt};
    if (!o.outer.empty()) params.outer = poly_argument(o.outer);
    emit(to_json(build_cheby_case(params)), o.output, out);
    return kExitOk;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
    const Instance inst = instance_from_json(parse_json_text(read_input(o.input, in)));
    const Report report = verify_instance(inst, {o.max_moment, o.numeric, o.tol});
    emit(to_json(report), o.output, out);
    const bool numeric_ok = !report.numeric_within_tolerance || *report.numeric_within_tolerance;
    return report.counterexample_established && numeric_ok ? kExitOk : kExitVerdictFailed;
}

int cmd_moments(const Options& o, std::istream& in, std::ostream& out) {
    const Instance inst = instance_from_json(parse_json_text(read_input(o.input, in)));
    auto seq = moment_sequence(inst.p, inst.q, inst.a, inst.b, o.max_moment);
    Json items = Json::array();
    bool all_zero = true;
    for (auto& m : seq) {
        all_zero = all_zero && m.value.is_zero();
        Json item{{"index", m.index}, {"value", to_json(m.value)}};
        if (o.numeric) {
            const auto v = moment_numeric(inst.p, inst.q, to_complex(inst.a), to_complex(inst.b), m.index);
            item["numeric"] = Json{{"re", v.real()}, {"im", v.imag()}};
        }
        items.push_back(std::move(item));
    }
    emit(Json{{"schema_version", kSchemaVersion},
              {"max_moment", o.max_moment},
              {"all_zero", all_zero},
              {"moments", std::move(items)}},
         o.output, out);
    return kExitOk;
}

int cmd_decompose(const Options& o, std::istream& in, std::ostream& out) {
    const Json doc = parse_json_text(read_input(o.input, in));
    Json result{{"schema_version", kSchemaVersion}};

    if (doc.contains("field")) {
        const RationalPoly p = rational_poly_from_json(doc);
        if (p.degree() <= 1) throw std::invalid_argument("decompose needs deg P > 1");
        const std::size_t n = p.degree().value();
        Json factors = Json::array();
        for (auto d : divisors(n)) {
            if (d <= 1 || d >= n) continue;
            if (auto f = right_factor(p, d)) {
                factors.push_back(Json{{"d", d}, {"W", to_json(f->inner)}, {"outer", to_json(f->outer)}});
            }
        }
        result["degree"] = n;
        result["right_factors"] = std::move(factors);
        emit(result, o.output, out);
        return kExitOk;
    }

    if (!doc.contains("P") || !doc.contains("Q")) {
        throw FormatError("decompose expects a polynomial object or an object with P and Q");
    }
    const RationalPoly p = rational_poly_from_json(doc.at("P"));
    const RationalPoly q = rational_poly_from_json(doc.at("Q"));
    if (p.degree() <= 1) throw std::invalid_argument("decompose needs deg P > 1");
    std::optional<CycElem> a, b;
    if (doc.contains("a") && doc.contains("b")) {
        a = endpoint_from_json(doc.at("a"));
        b = endpoint_from_json(doc.at("b"));
        if (a->order() != b->order()) throw FormatError("endpoints a, b must share a field");
    }
    Json factors = Json::array();
    bool holds = false;
    for (const auto& entry : common_right_factors(p, q)) {
        Json item = to_json(entry);
        if (a) {
            const bool agree = eval(entry.inner, *a) == eval(entry.inner, *b);
            holds = holds || agree;
            item["endpoints_agree"] = agree;
        }
        factors.push_back(std::move(item));
    }
    result["factors"] = std::move(factors);
    if (a) result["composition_condition"] = holds;
    emit(result, o.output, out);
    return kExitOk;
}

int cmd_cheby(const Options& o, std::ostream& out) {
    emit(to_json(chebyshev(o.cheby_k)), o.output, out);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Construct and certify counterexamples to the composition conjecture for polynomial moments", "momcert"};
    app.require_subcommand(1);
    app.add_option("-o,--output", o.output, "Write JSON to this file instead of standard output");

    auto* gen_power = app.add_subcommand("gen-power", "Power family: Q = z^m + z^n R(z^m), P = z^(nm) R(z^m)^m");
    gen_power->add_option("--m", o.m, "Exponent m >= 2")->required();
    gen_power->add_option("--n", o.n, "Exponent n >= 1, coprime to m")->required();
    gen_power->add_option("--r", o.r, std::string("R with R(c^m) = 0. ") + kPolyHelp)->required();
    gen_power->add_option("--c", o.c, "Rational c; endpoints are c times m-th roots of unity")->capture_default_str();
    gen_power->add_option("--roots", o.roots, "Root indices \"j,l\" with 0 <= j < l < m")->capture_default_str();
    gen_power->add_option("--outer", o.outer, std::string("Outer polynomial applied to P. ") + kPolyHelp);

    auto* gen_cheby = app.add_subcommand("gen-cheby", "Chebyshev family: Q = T_n + T_m, P = T_(nm)");
    gen_cheby->add_option("--n", o.n, "Index n >= 2")->required();
    gen_cheby->add_option("--m", o.m, "Index m >= 2, coprime to n")->required();
    gen_cheby->add_option("--outer", o.outer, std::string("Outer polynomial applied to P. ") + kPolyHelp);

    auto* verify = app.add_subcommand("verify", "Certify an instance; exit 0 iff it is a counterexample");
    verify->add_option("input", o.input, "Instance JSON file (default: standard input)");
    verify->add_option("--max-moment", o.max_moment, "Number of exact moments to compute")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify->add_flag("--numeric", o.numeric, "Also compute the double-precision moments");
    verify->add_option("--tol", o.tol, "Tolerance for the numeric check")->capture_default_str();

    auto* moments = app.add_subcommand("moments", "Exact moment sequence of an instance");
    moments->add_option("input", o.input, "Instance JSON file (default: standard input)");
    moments->add_option("--max-moment", o.max_moment, "Number of moments")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    moments->add_flag("--numeric", o.numeric, "Include double-precision values");

    auto* decompose = app.add_subcommand(
        "decompose",
        "Right composition factors: of one polynomial (proper factors), or common factors of {P, Q[, a, b]}");
    decompose->add_option("input", o.input, "JSON file (default: standard input)");

    auto* cheby = app.add_subcommand("cheby", "Print the monic Chebyshev polynomial T_k");
    cheby->add_option("k", o.cheby_k, "Index k >= 0")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (gen_power->parsed()) return cmd_gen_power(o, out);
        if (gen_cheby->parsed()) return cmd_gen_cheby(o, out);
        if (verify->parsed()) return cmd_verify(o, in, out);
        if (moments->parsed()) return cmd_moments(o, in, out);
        if (decompose->parsed()) return cmd_decompose(o, in, out);
        if (cheby->parsed()) return cmd_cheby(o, out);
    } catch (const FormatError& e) {
        err << "momcert: malformed input: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        err << "momcert: invalid parameter: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::domain_error& e) {
        err << "momcert: invalid parameter: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitBadInput;
}

}  // namespace momcert::cli
