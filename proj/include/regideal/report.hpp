#pragma once

// JSON and CSV forms of InvariantReport.

#include <ostream>
#include <string>

#include <json.hpp>

#include "regideal/invariants.hpp"

namespace regideal {

using Json = nlohmann::ordered_json;

inline Json to_json(const InvariantReport& r) {
    auto exact = [](const SolvedQuantity& q) -> Json {
        if (auto v = q.value()) return *v;
        return nullptr;
    };
    auto optional = [](const std::optional<std::uint64_t>& v) -> Json {
        if (v) return *v;
        return nullptr;
    };

    Json j;
    j["ring"] = r.ring;
    j["profile"] = r.profile;
    j["factors"] = r.factor_count;
    j["fields"] = r.field_count;
    j["reduced"] = r.reduced;
    j["vertices"] = r.vertices;
    j["edges"] = r.edges;
    j["arcs"] = r.arcs;
    j["delta"] = r.delta;
    j["max_degree_vertex_count"] = r.max_degree_vertex_count;
    j["degree_formula_ok"] = r.degree_formula_ok;
    j["omega_exact"] = exact(r.omega);
    j["omega_predicted"] = r.predicted.omega;
    j["chi_exact"] = exact(r.chi);
    j["chi_predicted"] = r.predicted.chi;
    j["chi_prime_exact"] = exact(r.chi_prime);
    j["chi_prime_predicted"] = r.predicted.chi_prime;
    j["beineke"] = r.beineke;

    Json intervals = Json::object();
    Json methods = Json::object();
    for (const auto& [name, q] : {std::pair{"omega", &r.omega}, {"chi", &r.chi}, {"chi_prime", &r.chi_prime}}) {
        if (!q->computed) continue;
        methods[name] = q->method;
        if (!q->resolved()) intervals[name] = Json::array({q->lower, q->upper});
    }
    j["intervals"] = intervals;
    j["methods"] = methods;

    j["case_formulas"] = {
        {"case", r.case_forms.name},
        {"delta", optional(r.case_forms.delta)},
        {"delta_matches", r.case_delta_matches},
        {"max_degree_count", optional(r.case_forms.max_degree_count)},
        {"max_degree_count_matches", r.case_count_matches},
    };
    j["product_coloring"] = {
        {"colors", r.product_colors},
        {"bound", r.product_bound},
        {"proper", r.product_proper},
    };
    j["structure"] = {{"antisymmetric", r.antisymmetric}, {"acyclic", r.acyclic}};

    Json mm = Json::array();
    for (const auto& m : r.mismatches)
        mm.push_back({{"quantity", m.quantity},
                      {"predicted", m.predicted},
                      {"computed", m.computed},
                      {"flag", "THEOREM_MISMATCH"}});
    j["mismatches"] = mm;
    j["unresolved"] = r.unresolved;

    Json timings = Json::object();
    for (const auto& [k, v] : r.timings) timings[k] = v;
    j["timings"] = timings;
    return j;
}

inline constexpr const char* kCsvHeader =
    "profile,factors,fields,vertices,edges,delta,max_degree_vertex_count,omega_exact,omega_predicted,"
    "chi_exact,chi_predicted,chi_prime_exact,chi_prime_predicted,beineke,degree_formula_ok,"
    "case,case_delta_matches,case_count_matches,product_colors,product_bound,mismatches,status,error";

namespace detail {

inline std::string csv_value(const SolvedQuantity& q) {
    if (!q.computed) return "";
    if (q.resolved()) return std::to_string(q.lower);
    return std::to_string(q.lower) + ".." + std::to_string(q.upper);
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace detail

/// Row status: "mismatch" takes precedence over "unresolved".
inline std::string report_status(const InvariantReport& r) {
    if (r.has_mismatch()) return "mismatch";
    if (!r.unresolved.empty()) return "unresolved";
    return "verified";
}

inline std::string csv_row(const InvariantReport& r) {
    std::string mm;
    for (const auto& m : r.mismatches) {
        if (!mm.empty()) mm += ';';
        mm += m.quantity + ":" + std::to_string(m.predicted) + "!=" + std::to_string(m.computed);
    }
    auto b = [](bool x) { return std::string(x ? "true" : "false"); };
    std::string row;
    auto add = [&](const std::string& s) {
        if (!row.empty()) row += ',';
        row += detail::csv_quote(s);
    };
    add(r.profile);
    add(std::to_string(r.factor_count));
    add(std::to_string(r.field_count));
    add(std::to_string(r.vertices));
    add(std::to_string(r.edges));
    add(std::to_string(r.delta));
    add(std::to_string(r.max_degree_vertex_count));
    add(detail::csv_value(r.omega));
    add(std::to_string(r.predicted.omega));
    add(detail::csv_value(r.chi));
    add(std::to_string(r.predicted.chi));
    add(detail::csv_value(r.chi_prime));
    add(std::to_string(r.predicted.chi_prime));
    add(b(r.beineke));
    add(b(r.degree_formula_ok));
    add(r.case_forms.name);
    add(b(r.case_delta_matches));
    add(b(r.case_count_matches));
    add(std::to_string(r.product_colors));
    add(std::to_string(r.product_bound));
    add(mm);
    add(report_status(r));
    add("");
    return row;
}

/// Row for a spec whose analysis failed before producing a report.
inline std::string csv_error_row(const std::string& profile, std::size_t factors, const std::string& error) {
    std::string row = detail::csv_quote(profile) + "," + std::to_string(factors);
    for (int i = 0; i < 19; ++i) row += ',';
    return row + ",failed," + detail::csv_quote(error);
}

} // namespace regideal
