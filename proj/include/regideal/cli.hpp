#pragma once

// Command-line front end: analyze, sweep, verify.
//
// Exit codes: 0 success, 1 input error, 2 resource limit, 3 a stated result
// disagrees with exact computation.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "regideal/graph.hpp"
#include "regideal/invariants.hpp"
#include "regideal/report.hpp"
#include "regideal/sweep.hpp"
#include "regideal/verify.hpp"

namespace regideal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitResource = 2;
inline constexpr int kExitMismatch = 3;

/// --timeout if given, else REGIDEAL_TIMEOUT, else 60 s.
inline double resolve_timeout(const std::optional<double>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("REGIDEAL_TIMEOUT")) {
        try {
            double v = std::stod(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    return 60.0;
}

namespace detail {

inline void parse_exact(const std::string& list, AnalyzeOptions& opt) {
    opt.exact_omega = opt.exact_chi = opt.exact_chi_prime = false;
    if (list == "none") return;
    if (list == "all") {
        opt.exact_omega = opt.exact_chi = opt.exact_chi_prime = true;
        return;
    }
    std::stringstream ss(list);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item == "omega") opt.exact_omega = true;
        else if (item == "chi") opt.exact_chi = true;
        else if (item == "chi_prime") opt.exact_chi_prime = true;
        else throw SpecError("unknown --exact quantity '" + item + "' (omega, chi, chi_prime, all, none)");
    }
}

/// Writes to `path`, or to `fallback` when path is empty or "-".
template <class F>
void emit(const std::string& path, std::ostream& fallback, F&& write) {
    if (path.empty() || path == "-") {
        write(fallback);
        return;
    }
    std::ofstream f(path);
    if (!f) throw SpecError("cannot open '" + path + "' for writing");
    write(f);
}

} // namespace detail

struct AnalyzeArgs {
    std::optional<std::uint64_t> zn;
    std::string profile;
    std::string exact = "all";
    std::optional<double> timeout;
    std::uint64_t max_vertices = kDefaultVertexLimit;
    std::string out;
    std::string dot;
    std::string dot_mode = "digraph";
};

inline int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
    try {
        if (a.zn.has_value() == !a.profile.empty()) throw SpecError("give exactly one of --zn or --profile");
        AnalyzeOptions opt;
        opt.timeout_seconds = resolve_timeout(a.timeout);
        opt.vertex_limit = a.max_vertices;
        detail::parse_exact(a.exact, opt);

        InvariantReport report;
        RegDigraph graph;
        if (a.zn) {
            auto ctx = factor_modulus(*a.zn);
            report = analyze(ctx, opt);
            if (!a.dot.empty()) graph = build_digraph(ctx, opt.vertex_limit);
        } else {
            auto spec = RingSpec::from_profile(a.profile);
            report = analyze(spec, opt);
            if (!a.dot.empty()) graph = build_digraph(spec, opt.vertex_limit);
        }
        detail::emit(a.out, out, [&](std::ostream& os) { os << to_json(report).dump(2) << '\n'; });
        if (!a.dot.empty()) {
            auto mode = a.dot_mode == "graph" ? DotMode::Graph : DotMode::Digraph;
            detail::emit(a.dot, out, [&](std::ostream& os) { write_dot(os, graph, mode, report.ring); });
        }
        for (const auto& m : report.mismatches)
            err << "THEOREM_MISMATCH " << m.quantity << ": predicted " << m.predicted << ", computed " << m.computed
                << '\n';
        return report.has_mismatch() ? kExitMismatch : kExitOk;
    } catch (const GraphTooLarge& e) {
        err << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

struct SweepArgs {
    SweepConfig config;
    std::optional<double> timeout;
    std::string csv;
    std::string out;
};

inline int cmd_sweep(SweepArgs a, std::ostream& out, std::ostream& err) {
    try {
        a.config.timeout_seconds = resolve_timeout(a.timeout);
        a.config.validate();
        auto rows = run_sweep(a.config);
        detail::emit(a.csv, out, [&](std::ostream& os) { write_csv(os, rows); });
        if (!a.out.empty()) {
            Json all = Json::array();
            for (const auto& r : rows) {
                if (r.report) all.push_back(to_json(*r.report));
                else all.push_back({{"profile", r.spec.profile_string()}, {"error", r.error}});
            }
            detail::emit(a.out, out, [&](std::ostream& os) { os << all.dump(2) << '\n'; });
        }
        const auto s = summarize(rows);
        err << summary_line(s) << '\n';
        return s.mismatched ? kExitMismatch : kExitOk;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

struct VerifyArgs {
    std::string suite = "paper";
    std::vector<std::string> only;
    std::optional<double> timeout;
};

inline int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    if (a.suite != "paper") {
        err << "error: unknown suite '" << a.suite << "' (available: paper)\n";
        return kExitInput;
    }
    std::vector<const verify::Check*> selected;
    if (a.only.empty()) {
        for (const auto& c : verify::checks()) selected.push_back(&c);
    } else {
        for (const auto& name : a.only) {
            const auto* c = verify::find_check(name);
            if (!c) {
                err << "error: unknown check '" << name << "'\n";
                return kExitInput;
            }
            selected.push_back(c);
        }
    }
    verify::Options vo;
    vo.timeout_seconds = resolve_timeout(a.timeout);
    verify::Context ctx(vo);
    bool all_pass = true;
    for (const auto* c : selected) {
        auto r = c->run(ctx);
        all_pass = all_pass && r.passed();
        out << std::left << std::setw(8) << verify::to_string(r.status) << std::setw(20) << r.name
            << std::fixed << std::setprecision(2) << std::setw(9) << r.seconds << "  " << c->summary;
        if (!r.detail.empty()) out << " (" << r.detail << ")";
        out << '\n';
    }
    return all_pass ? kExitOk : kExitMismatch;
}

/// Entry point shared by the executable and the tests; args excludes argv[0].
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Regular graph of ideals: construction, closed forms and exact verification", "regideal"};
    app.require_subcommand(1);

    AnalyzeArgs aa;
    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one ring (Z_n or a t-profile)");
    analyze_cmd->add_option("--zn", aa.zn, "Modulus n of Z_n");
    analyze_cmd->add_option("--profile", aa.profile, "Proper-ideal counts t1,t2,...,tk of the local factors");
    analyze_cmd->add_option("--exact", aa.exact, "Exact quantities: comma list of omega,chi,chi_prime, or all/none");
    analyze_cmd->add_option("--timeout", aa.timeout, "Solver timeout in seconds per quantity");
    analyze_cmd->add_option("--max-vertices", aa.max_vertices, "Vertex limit for graph construction");
    analyze_cmd->add_option("--out", aa.out, "JSON report path (default stdout)");
    analyze_cmd->add_option("--dot", aa.dot, "Write the graph in DOT format to this path");
    analyze_cmd->add_option("--dot-mode", aa.dot_mode, "digraph (arcs) or graph (underlying edges)")
        ->check(CLI::IsMember({"digraph", "graph"}));

    SweepArgs sa;
    auto* sweep_cmd = app.add_subcommand("sweep", "Analyze every canonical t-vector within bounds");
    sweep_cmd->add_option("--max-factors", sa.config.max_factors, "Maximum number of local factors");
    sweep_cmd->add_option("--max-t", sa.config.max_t, "Maximum proper-ideal count per factor");
    sweep_cmd->add_option("--max-vertices", sa.config.max_vertices, "Skip specs with more vertices");
    sweep_cmd->add_option("--timeout", sa.timeout, "Solver timeout in seconds per quantity");
    sweep_cmd->add_option("--jobs", sa.config.jobs, "Worker threads");
    sweep_cmd->add_option("--csv", sa.csv, "CSV output path (default stdout)");
    sweep_cmd->add_option("--out", sa.out, "Also write all reports as a JSON array");

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
    verify_cmd->add_option("suite", va.suite, "Suite name (paper)");
    verify_cmd->add_option("--only", va.only, "Run only the named check(s)");
    verify_cmd->add_option("--timeout", va.timeout, "Solver timeout in seconds per quantity");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInput;
    }

    if (*analyze_cmd) return cmd_analyze(aa, out, err);
    if (*sweep_cmd) return cmd_sweep(sa, out, err);
    return cmd_verify(va, out, err);
}

} // namespace regideal::cli
