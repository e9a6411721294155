// rspin: exact r-spin invariants, tropical fans, and verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rspin/cycle_io.hpp"
#include "rspin/verify.hpp"

using namespace rspin;

namespace {

std::string marks_csv(const std::vector<int>& marks) {
    std::string s;
    for (size_t i = 0; i < marks.size(); ++i)
        s += (i ? "," : "") + std::to_string(marks[i]);
    return s;
}

Rational compute_by(const std::string& method, const MonodromyVector& v) {
    if (method == "closed") return closed_formula(v);
    if (method == "oracle") return recursion_oracle(v);
    return invariant(v);
}

int cmd_compute(const std::string& spec, const std::string& method) {
    MonodromyVector v = parse_vector_spec(spec);
    require_numerical(v, "compute");
    std::cout << to_string(compute_by(method, v)) << '\n';
    std::cout << "normalized=" << normalized_integer(v).str() << '\n';
    std::cout << "method=" << method << '\n';
    return 0;
}

int cmd_table(int n, int r, const std::string& format, const std::string& method) {
    if (n < 3 || r < 2) throw ParseError("table needs n >= 3 and r >= 2");
    auto rows = numerical_vectors_sorted(n, r);
    if (format == "csv") {
        for (int i = 1; i <= n; ++i) std::cout << 'm' << i << ',';
        std::cout << "value\n";
        for (const auto& v : rows)
            std::cout << marks_csv(v.marks) << ',' << to_string(compute_by(method, v))
                      << '\n';
    } else if (format == "json-lines") {
        for (const auto& v : rows) {
            std::cout << "{\"r\":" << r << ",\"m\":[" << marks_csv(v.marks)
                      << "],\"value\":\"" << to_string(compute_by(method, v)) << "\"}\n";
        }
    } else {
        for (const auto& v : rows) {
            std::cout << '(' << marks_csv(v.marks) << ") -> "
                      << to_string(compute_by(method, v)) << '\n';
        }
    }
    return 0;
}

int cmd_tropicalize(const std::string& spec, int anchor, bool scale) {
    MonodromyVector v = parse_vector_spec(spec);
    TropicalCycle c = tropicalize(v);
    export_cycle(c, std::cout);
    if (scale) {
        for (const auto& [tree, w] : c.weights)
            std::cout << "# scaled " << detail::tree_text(tree) << ' '
                      << to_string(w * v.r) << '\n';
    }
    if (anchor != 0 && c.dim == 1) {
        FanVector probe(c.n, anchor);
        for (auto [i, j] : probe.pairs)
            std::cout << "# boomerang " << anchor << " {" << i << ',' << j << "} "
                      << to_string(boomerang(c, anchor, i, j)) << '\n';
    }
    return 0;
}

int cmd_balance(const std::string& file, int anchor) {
    TropicalCycle c;
    if (file == "-") {
        c = import_cycle(std::cin);
    } else {
        std::ifstream in(file);
        if (!in) throw ParseError("cannot open " + file);
        c = import_cycle(in);
    }
    bool ok = true;
    if (c.dim == 1) {
        std::vector<int> anchors;
        if (anchor != 0) anchors.push_back(anchor);
        else
            for (int k = 1; k <= c.n; ++k) anchors.push_back(k);
        for (int k : anchors) {
            auto rep = check_balancing_origin(c, k);
            std::cout << "origin anchor=" << k << ' '
                      << (rep.balanced ? "balanced" : "unbalanced") << '\n';
            ok = ok && rep.balanced;
        }
    } else {
        for (MarkMask e : all_splits(c.n)) {
            SplitTree tau{c.n, {e}};
            bool supported = false;
            for (const auto& [tree, w] : c.weights)
                if (w != 0 && std::find(tree.edges.begin(), tree.edges.end(), e) !=
                                  tree.edges.end()) {
                    supported = true;
                    break;
                }
            if (!supported) continue;
            BalanceReport rep = c.source ? check_balancing_face(c, tau)
                                         : check_balancing_generic(c, tau, anchor);
            std::cout << "face " << detail::subset_text(e) << ' '
                      << (rep.balanced ? "balanced" : "unbalanced") << '\n';
            ok = ok && rep.balanced;
        }
    }
    std::cout << (ok ? "balanced" : "unbalanced") << '\n';
    return ok ? 0 : 1;
}

int cmd_chambers(int n, int r_max) {
    if (n < 4 || r_max < 2) throw ParseError("chambers needs n >= 4 and r_max >= 2");
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("m" + std::to_string(i));
    names.push_back("r");
    int index = 0;
    bool all_ok = true;
    for (const auto& [pattern, info] : chamber_scan(n, r_max)) {
        std::cout << "chamber " << index++ << " samples=" << info.samples.size()
                  << " active=" << pattern.active.size()
                  << " degree=" << info.chamber.poly.total_degree()
                  << " verified=" << (info.verified ? "yes" : "no") << '\n';
        std::cout << "  N = " << info.chamber.poly.to_text(names) << '\n';
        std::cout << "  w_r = N / (2*r^" << (n - 3) << ")\n";
        all_ok = all_ok && info.verified;
    }
    return all_ok ? 0 : 1;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opt) {
    std::vector<SuiteResult> results;
    if (suite == "all") results = run_verification(opt);
    else
        results.push_back(run_suite(suite, opt));
    long long failures = 0;
    for (const auto& s : results) {
        std::cout << "suite " << s.name << " cases=" << s.cases
                  << " failures=" << s.failures << '\n';
        for (const auto& rep : s.reproducers) std::cout << "  failed: " << rep << '\n';
        failures += s.failures;
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact genus-zero r-spin invariants and tropical fans"};
    app.require_subcommand(1);

    std::string spec, method = "auto", format = "text", file = "-", suite = "all";
    int n = 0, r = 0, anchor = 0, r_max = 8;
    bool scale = false;
    VerifyOptions opt;

    auto* compute = app.add_subcommand("compute", "compute one invariant");
    compute->add_option("spec", spec, "vector, e.g. \"r=7;m=3,4,5,6,6\"")->required();
    compute->add_option("--method", method)
        ->check(CLI::IsMember({"closed", "oracle", "auto"}));

    auto* table = app.add_subcommand("table", "all numerical vectors for (n, r)");
    table->add_option("--n", n)->required();
    table->add_option("--r", r)->required();
    table->add_option("--format", format)
        ->check(CLI::IsMember({"text", "csv", "json-lines"}));
    table->add_option("--method", method)
        ->check(CLI::IsMember({"closed", "oracle", "auto"}));

    auto* trop = app.add_subcommand("tropicalize", "emit a cycle document");
    trop->add_option("spec", spec)->required();
    trop->add_option("--anchor", anchor, "also print boomerangs at this anchor");
    trop->add_flag("--scale", scale, "also print display-scaled r*weight integers");

    auto* balance = app.add_subcommand("balance", "check a cycle document");
    balance->add_option("--file", file, "cycle document path, or - for stdin");
    balance->add_option("--anchor", anchor);

    auto* chambers = app.add_subcommand("chambers", "scan chamber polynomials");
    chambers->add_option("--n", n)->required();
    chambers->add_option("--r-max", r_max);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", suite, "suite name or \"all\"");
    verify->add_option("--n-max", opt.n_max);
    verify->add_option("--r-max", opt.r_max);
    verify->add_option("--jobs", opt.jobs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(spec, method);
        if (table->parsed()) return cmd_table(n, r, format, method);
        if (trop->parsed()) return cmd_tropicalize(spec, anchor, scale);
        if (balance->parsed()) return cmd_balance(file, anchor);
        if (chambers->parsed()) return cmd_chambers(n, r_max);
        if (verify->parsed()) {
            if (suite != "all") {
                bool known = false;
                for (const auto& name : suite_names()) known = known || name == suite;
                if (!known) throw UnknownSuite("unknown suite: " + suite);
            }
            return cmd_verify(suite, opt);
        }
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
