#pragma once

// Sweeps over every canonical (non-increasing) t-vector within bounds.

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "regideal/invariants.hpp"
#include "regideal/report.hpp"
#include "regideal/ring_model.hpp"

namespace regideal {

struct SweepConfig {
    std::size_t max_factors = 3;
    std::uint32_t max_t = 2;
    std::uint64_t max_vertices = 600;
    double timeout_seconds = 60.0;
    std::size_t jobs = 1;

    void validate() const {
        if (max_factors == 0 || max_t == 0 || max_vertices == 0 || timeout_seconds <= 0 || jobs == 0)
            throw SpecError("sweep bounds must all be positive");
    }
};

/// Canonical specs ordered by factor count, then lexicographically. The single
/// field is skipped, as is anything above max_vertices.
inline std::vector<RingSpec> canonical_specs(const SweepConfig& cfg) {
    cfg.validate();
    std::vector<RingSpec> out;
    std::vector<std::uint32_t> ts;
    std::function<void(std::size_t)> rec = [&](std::size_t n) {
        if (ts.size() == n) {
            auto spec = RingSpec::from_t(ts);
            if (spec.vertex_count() > 0 && spec.vertex_count() <= cfg.max_vertices) out.push_back(spec);
            return;
        }
        const auto cap = ts.empty() ? cfg.max_t : ts.back();
        for (std::uint32_t t = 1; t <= cap; ++t) {
            ts.push_back(t);
            rec(n);
            ts.pop_back();
        }
    };
    for (std::size_t n = 1; n <= cfg.max_factors; ++n) rec(n);
    return out;
}

struct SweepRow {
    RingSpec spec;
    std::optional<InvariantReport> report;
    std::string error;

    std::string status() const { return report ? report_status(*report) : "failed"; }
};

struct SweepSummary {
    std::size_t verified = 0;
    std::size_t mismatched = 0;
    std::size_t unresolved = 0;
    std::size_t failed = 0;

    std::size_t total() const { return verified + mismatched + unresolved + failed; }
};

/// Analyses every spec; with jobs > 1 a fixed pool pulls specs in order.
/// Rows come back in spec order whatever the completion order.
inline std::vector<SweepRow> run_sweep(const std::vector<RingSpec>& specs, const AnalyzeOptions& opt,
                                       std::size_t jobs = 1) {
    std::vector<SweepRow> rows(specs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < specs.size();) {
            rows[i].spec = specs[i];
            try {
                rows[i].report = analyze(specs[i], opt);
            } catch (const std::exception& e) {
                rows[i].error = e.what();
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    return rows;
}

inline std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    AnalyzeOptions opt;
    opt.timeout_seconds = cfg.timeout_seconds;
    opt.vertex_limit = cfg.max_vertices;
    return run_sweep(canonical_specs(cfg), opt, cfg.jobs);
}

inline SweepSummary summarize(const std::vector<SweepRow>& rows) {
    SweepSummary s;
    for (const auto& r : rows) {
        auto st = r.status();
        if (st == "verified") ++s.verified;
        else if (st == "mismatch") ++s.mismatched;
        else if (st == "unresolved") ++s.unresolved;
        else ++s.failed;
    }
    return s;
}

inline void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << kCsvHeader << '\n';
    for (const auto& r : rows) {
        if (r.report) os << csv_row(*r.report) << '\n';
        else os << csv_error_row(r.spec.profile_string(), r.spec.size(), r.error) << '\n';
    }
}

inline std::string summary_line(const SweepSummary& s) {
    return "specs=" + std::to_string(s.total()) + " verified=" + std::to_string(s.verified) +
           " mismatched=" + std::to_string(s.mismatched) + " unresolved=" + std::to_string(s.unresolved) +
           " failed=" + std::to_string(s.failed);
}

} // namespace regideal
