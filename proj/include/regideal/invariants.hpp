#pragma once

// Closed-form invariants of the regular graph of ideals, and an analysis that
// checks them against exact solver results.
//
// The solvers are ground truth. Every closed form is a prediction that is
// compared, never substituted.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "regideal/graph.hpp"
#include "regideal/ring_model.hpp"
#include "regideal/solvers.hpp"

namespace regideal {

struct DegreeTriple {
    std::uint64_t d_plus = 0;
    std::uint64_t d_minus = 0;
    std::uint64_t d = 0;

    friend bool operator==(const DegreeTriple&, const DegreeTriple&) = default;
};

namespace detail {

inline std::uint64_t product_of_successors(const RingSpec& spec, const std::vector<std::size_t>& idx) {
    std::uint64_t p = 1;
    for (auto k : idx) p *= std::uint64_t{spec.t(k)} + 1;
    return p;
}

} // namespace detail

/// Out-, in- and total degree of I from its index sets alone.
///   d+ = 0 if Δ_I empty, prod_{Δ_I}(t+1) - 2 if Λ_I empty, else prod_{Δ_I}(t+1) - 1
///   d- likewise with Υ_I
/// and d from the five-way split on which index sets are empty.
inline DegreeTriple degree_formula(const IdealVector& ideal, const RingSpec& spec) {
    ideal.validate(spec);
    const auto p = classify(ideal);
    const auto full = detail::product_of_successors(spec, p.full);
    const auto zero = detail::product_of_successors(spec, p.zero);
    const bool no_full = p.full.empty(), no_zero = p.zero.empty(), no_mid = p.nontrivial.empty();

    DegreeTriple t;
    t.d_plus = no_full ? 0 : (no_mid ? full - 2 : full - 1);
    t.d_minus = no_zero ? 0 : (no_mid ? zero - 2 : zero - 1);

    if (p.nontrivial.size() == spec.size()) t.d = 0;
    else if (no_mid) t.d = full + zero - 4;
    else if (no_full) t.d = zero - 1;
    else if (no_zero) t.d = full - 1;
    else t.d = full + zero - 2;
    return t;
}

/// Degrees of vertex v counted from the built digraph.
inline DegreeTriple degree_counted(const RegDigraph& g, Vertex v) {
    DegreeTriple t;
    t.d_plus = g.out.at(v).size();
    t.d_minus = g.in.at(v).size();
    t.d = g.underlying.degree(v);
    return t;
}

struct MaxDegree {
    std::uint64_t delta = 0;
    std::uint64_t count = 0; // vertices attaining delta
};

/// Scans degree_formula over every vertex.
inline MaxDegree max_degree(const RingSpec& spec) {
    MaxDegree m;
    for (const auto& I : enumerate_ideals(spec)) {
        auto d = degree_formula(I, spec).d;
        if (d > m.delta) m = {d, 1};
        else if (d == m.delta) ++m.count;
    }
    return m;
}

inline MaxDegree max_degree(const Graph& g) {
    MaxDegree m;
    for (Vertex v = 0; v < g.size(); ++v) {
        std::uint64_t d = g.degree(v);
        if (d > m.delta) m = {d, 1};
        else if (d == m.delta) ++m.count;
    }
    return m;
}

/// Case-specific closed forms for Δ and for the number of maximum-degree
/// vertices. Forms are only filled in where their case hypotheses hold.
struct CaseFormulas {
    std::string name;
    std::optional<std::uint64_t> delta;
    std::optional<std::uint64_t> max_degree_count;
};

inline CaseFormulas case_formulas(const RingSpec& spec) {
    CaseFormulas c;
    const auto n = spec.size();
    const auto f = spec.field_count();
    const auto t = spec.sorted_t();
    std::uint64_t head = 1; // prod_{k=1}^{n-1} (t_k + 1) over the sorted t-vector
    for (std::size_t k = 0; k + 1 < n; ++k) head *= std::uint64_t{t[k]} + 1;

    if (n == 1) {
        c.name = spec.is_reduced() ? "field" : "local";
        c.delta = 0;
    } else if (spec.is_reduced()) {
        c.name = "reduced";
        c.delta = (std::uint64_t{1} << (n - 1)) - 2;
        if (n >= 3) c.max_degree_count = 2 * n;
    } else if (n == 2) {
        c.name = "two-factor";
        c.delta = std::uint64_t{t[0] - 1} + std::uint64_t{t[1] - 1};
    } else if (f == 0) {
        c.name = "no-field-summand";
        c.delta = head - 1;
        c.max_degree_count = 2 * spec.multiplicity_of_sorted(n - 1) * std::uint64_t{t[n - 1] - 1};
    } else {
        c.name = "field-summand";
        c.delta = head - 2;
        c.max_degree_count = 2 * f;
    }
    return c;
}

/// Sufficient condition for class 1: every maximum-degree vertex u has a
/// neighbour v with Δ - d(v) + 2 greater than the number of maximum-degree vertices.
inline bool beineke_condition(const Graph& g) {
    const auto m = max_degree(g);
    if (m.delta == 0) return false;
    for (Vertex u = 0; u < g.size(); ++u) {
        if (g.degree(u) != m.delta) continue;
        bool ok = false;
        for (auto v : g.neighbors(u))
            if (m.delta + 2 > g.degree(v) + m.count) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

struct Predictions {
    std::uint64_t omega = 0;
    std::uint64_t chi = 0;
    std::uint64_t chi_prime = 0;
};

/// ω = χ = 2n - f - 1 and χ' = Δ.
inline Predictions predictions(const RingSpec& spec) {
    Predictions p;
    p.omega = 2 * spec.size() - spec.field_count() - 1;
    p.chi = p.omega;
    p.chi_prime = max_degree(spec).delta;
    return p;
}

struct ProductColoring {
    std::vector<std::vector<int>> tuples; // per vertex: 0 zero, -1 full, 1 nontrivial
    std::vector<int> colors;              // per vertex: index of its tuple among the distinct ones
    std::size_t color_count = 0;
    std::uint64_t bound = 0;              // prod c_i - 2, c_i = 2 for fields and 3 otherwise
};

/// Colours each ideal by its zero/full/nontrivial pattern. Local factor graphs
/// are edgeless, so one colour per factor covers the nontrivial ideals.
inline ProductColoring product_coloring(const RingSpec& spec) {
    ProductColoring pc;
    pc.bound = 1;
    for (const auto& f : spec.factors()) pc.bound *= f.is_field() ? 2 : 3;
    pc.bound -= 2;
    for (const auto& I : enumerate_ideals(spec)) {
        std::vector<int> tuple;
        for (const auto& c : I.classes()) tuple.push_back(c.is_zero() ? 0 : c.is_full() ? -1 : 1);
        pc.tuples.push_back(std::move(tuple));
    }
    auto distinct = pc.tuples;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const auto& t : pc.tuples)
        pc.colors.push_back(static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), t) - distinct.begin()));
    pc.color_count = distinct.size();
    return pc;
}

// ---------------------------------------------------------------------------
// Analysis report.

struct Mismatch {
    std::string quantity;
    std::uint64_t predicted = 0;
    std::uint64_t computed = 0;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// Exact value when the solver finished, otherwise the proven interval.
struct SolvedQuantity {
    bool computed = false; // false when the quantity was not requested
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    std::string method;

    bool resolved() const noexcept { return computed && lower == upper; }
    std::optional<std::uint64_t> value() const {
        return resolved() ? std::optional<std::uint64_t>(lower) : std::nullopt;
    }
};

struct AnalyzeOptions {
    double timeout_seconds = 60.0;
    std::uint64_t vertex_limit = kDefaultVertexLimit;
    bool exact_omega = true;
    bool exact_chi = true;
    bool exact_chi_prime = true;
};

struct InvariantReport {
    std::string ring; // "Z_36" or "profile 2,2"
    std::string profile;
    std::size_t factor_count = 0;
    std::size_t field_count = 0;
    bool reduced = false;
    std::uint64_t vertices = 0;
    std::uint64_t edges = 0;
    std::uint64_t arcs = 0;

    std::uint64_t delta = 0;
    std::uint64_t max_degree_vertex_count = 0;
    bool degree_formula_ok = false;

    SolvedQuantity omega, chi, chi_prime;
    Predictions predicted;
    bool beineke = false;

    CaseFormulas case_forms;
    bool case_delta_matches = true;
    bool case_count_matches = true;

    std::size_t product_colors = 0;
    std::uint64_t product_bound = 0;
    bool product_proper = false;

    bool antisymmetric = false;
    bool acyclic = false;

    std::vector<Mismatch> mismatches;
    std::vector<std::string> unresolved;
    std::map<std::string, double> timings; // seconds per solver

    bool has_mismatch() const noexcept { return !mismatches.empty(); }
};

namespace detail {

inline SolvedQuantity from_bounds(std::uint64_t lo, std::uint64_t hi, std::string method) {
    return SolvedQuantity{true, lo, hi, std::move(method)};
}

inline InvariantReport analyze_graph(const RingSpec& spec, const RegDigraph& dg, const AnalyzeOptions& opt) {
    InvariantReport r;
    const auto& g = dg.underlying;
    r.profile = spec.profile_string();
    r.factor_count = spec.size();
    r.field_count = spec.field_count();
    r.reduced = spec.is_reduced();
    r.vertices = dg.size();
    r.edges = g.edge_count();
    r.arcs = dg.arc_count();
    r.antisymmetric = is_antisymmetric(dg);
    r.acyclic = is_acyclic(dg);

    Stopwatch sw;
    const auto scanned = max_degree(spec);
    r.delta = scanned.delta;
    r.max_degree_vertex_count = scanned.count;
    r.degree_formula_ok = true;
    for (Vertex v = 0; v < dg.size(); ++v)
        if (degree_formula(dg.vertices[v], spec) != degree_counted(dg, v)) r.degree_formula_ok = false;
    const auto counted = max_degree(g);
    if (counted.delta != scanned.delta || counted.count != scanned.count) r.degree_formula_ok = false;
    r.timings["degrees"] = sw.seconds();

    r.predicted = predictions(spec);
    r.beineke = beineke_condition(g);
    r.case_forms = case_formulas(spec);
    if (r.case_forms.delta) r.case_delta_matches = *r.case_forms.delta == r.delta;
    if (r.case_forms.max_degree_count)
        r.case_count_matches = *r.case_forms.max_degree_count == r.max_degree_vertex_count;

    Stopwatch pcw;
    const auto pc = product_coloring(spec);
    r.product_colors = pc.color_count;
    r.product_bound = pc.bound;
    r.product_proper = is_proper_vertex_coloring(g, pc.colors);
    r.timings["product_coloring"] = pcw.seconds();

    std::optional<CliqueResult> clique;
    if (opt.exact_omega || opt.exact_chi) {
        clique = clique_number_exact(g, Deadline::in_seconds(opt.timeout_seconds));
        if (!is_clique(g, clique->clique)) throw std::logic_error("clique solver returned a non-clique");
        r.timings["omega"] = clique->seconds;
        if (opt.exact_omega) r.omega = from_bounds(clique->lower, clique->upper, "branch-and-bound");
    }
    if (opt.exact_chi) {
        auto res = chromatic_number_exact(g, Deadline::in_seconds(opt.timeout_seconds), clique);
        if (g.size() && !is_proper_vertex_coloring(g, res.colors))
            throw std::logic_error("colouring solver returned an improper colouring");
        r.chi = from_bounds(res.lower, res.upper, res.method);
        r.timings["chi"] = res.seconds;
    }
    if (opt.exact_chi_prime) {
        auto res = edge_chromatic_number_exact(g, Deadline::in_seconds(opt.timeout_seconds));
        if (res.exact() && !res.colors.empty() && !is_proper_edge_coloring(g, res.colors))
            throw std::logic_error("edge colouring solver returned an improper colouring");
        r.chi_prime = from_bounds(res.lower, res.upper, res.method);
        r.timings["chi_prime"] = res.seconds;
    }

    auto compare = [&](const char* name, const SolvedQuantity& q, std::uint64_t predicted) {
        if (!q.computed) return;
        if (!q.resolved()) {
            r.unresolved.emplace_back(name);
            return;
        }
        if (q.lower != predicted) r.mismatches.push_back({name, predicted, q.lower});
    };
    compare("omega", r.omega, r.predicted.omega);
    compare("chi", r.chi, r.predicted.chi);
    compare("chi_prime", r.chi_prime, r.predicted.chi_prime);
    return r;
}

} // namespace detail

inline InvariantReport analyze(const RingSpec& spec, const AnalyzeOptions& opt = {}) {
    require_non_domain(spec);
    auto dg = build_digraph(spec, opt.vertex_limit);
    auto r = detail::analyze_graph(spec, dg, opt);
    r.ring = "profile " + spec.profile_string();
    return r;
}

inline InvariantReport analyze(const ZnContext& ctx, const AnalyzeOptions& opt = {}) {
    auto dg = build_digraph(ctx, opt.vertex_limit);
    auto r = detail::analyze_graph(ctx.spec(), dg, opt);
    r.ring = "Z_" + std::to_string(ctx.modulus());
    return r;
}

} // namespace regideal
