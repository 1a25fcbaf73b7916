#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "regideal/report.hpp"

using namespace regideal;

namespace {

const auto R = IdealClass::full();
const auto Z = IdealClass::zero();
const auto M = IdealClass::nontrivial(1);

std::vector<std::vector<std::uint32_t>> specs() {
    return {{2}, {1, 1}, {2, 1}, {2, 2}, {3, 2}, {1, 1, 1}, {2, 1, 1}, {2, 2, 2}, {3, 3, 3},
            {3, 1, 2}, {1, 1, 1, 1}, {2, 2, 1, 1}, {4, 1}, {2, 3, 1, 2}, {1, 1, 1, 1, 1, 1}};
}

} // namespace

TEST(DegreeFormula, Examples) {
    auto z36 = RingSpec::from_t({2, 2});
    EXPECT_EQ(degree_formula(IdealVector({R, Z}), z36).d, 2u);
    EXPECT_EQ(degree_formula(IdealVector({M, M}), z36), (DegreeTriple{0, 0, 0}));

    auto six = RingSpec::from_t({1, 1, 1, 1, 1, 1});
    auto half = IdealVector({R, R, R, Z, Z, Z});
    EXPECT_EQ(degree_formula(half, six), (DegreeTriple{6, 6, 12}));
    EXPECT_EQ(degree_formula(IdealVector({R, Z, Z, Z, Z, Z}), six).d_plus, 0u);
}

TEST(DegreeFormula, AgreesWithCountedDegrees) {
    for (const auto& ts : specs()) {
        auto spec = RingSpec::from_t(ts);
        auto g = build_digraph(spec);
        for (Vertex v = 0; v < g.size(); ++v)
            ASSERT_EQ(degree_formula(g.vertices[v], spec), degree_counted(g, v))
                << spec.profile_string() << " " << g.vertices[v].to_string();
    }
}

TEST(MaxDegree, Examples) {
    auto reduced6 = max_degree(RingSpec::from_t({1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(reduced6.delta, 30u);
    EXPECT_EQ(reduced6.count, 12u);
    auto z36 = max_degree(RingSpec::from_t({2, 2}));
    EXPECT_EQ(z36.delta, 2u);
    EXPECT_EQ(z36.count, 6u);
    EXPECT_EQ(max_degree(RingSpec::from_t({5})).delta, 0u);
    for (const auto& ts : specs()) {
        auto spec = RingSpec::from_t(ts);
        auto g = build_digraph(spec);
        auto a = max_degree(spec), b = max_degree(g.underlying);
        EXPECT_EQ(a.delta, b.delta);
        EXPECT_EQ(a.count, b.count);
    }
}

TEST(CaseFormulas, NamesAndValues) {
    auto c = case_formulas(RingSpec::from_t({1, 1, 1, 1}));
    EXPECT_EQ(c.name, "reduced");
    EXPECT_EQ(c.delta, 6u);
    EXPECT_EQ(c.max_degree_count, 8u);
    EXPECT_EQ(case_formulas(RingSpec::from_t({3, 2})).name, "two-factor");
    EXPECT_EQ(case_formulas(RingSpec::from_t({3, 2})).delta, 3u);
    EXPECT_EQ(case_formulas(RingSpec::from_t({3})).name, "local");
    EXPECT_EQ(case_formulas(RingSpec::from_t({2, 1, 1})).name, "field-summand");
    EXPECT_EQ(case_formulas(RingSpec::from_t({2, 2, 2})).name, "no-field-summand");
}

TEST(CaseFormulas, ReducedAndFieldSummandMatchScan) {
    for (auto ts : std::vector<std::vector<std::uint32_t>>{
             {1, 1, 1}, {1, 1, 1, 1, 1}, {2, 1, 1}, {3, 2, 1}, {2, 2, 1, 1}, {3, 1}, {2, 3}}) {
        auto spec = RingSpec::from_t(ts);
        auto c = case_formulas(spec);
        auto m = max_degree(spec);
        EXPECT_EQ(c.delta, m.delta) << spec.profile_string();
        if (c.max_degree_count) {
            EXPECT_EQ(*c.max_degree_count, m.count) << spec.profile_string();
        }
    }
}

TEST(Beineke, Examples) {
    EXPECT_TRUE(beineke_condition(oracle::star(3)));
    EXPECT_FALSE(beineke_condition(build_digraph(RingSpec::from_t({2, 2})).underlying));
    EXPECT_FALSE(beineke_condition(Graph(4, {})));
    EXPECT_FALSE(beineke_condition(oracle::complete(5)));
}

TEST(Beineke, ImpliesClassOne) {
    std::mt19937_64 rng(17);
    std::bernoulli_distribution coin(0.3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 14;
        std::vector<Edge> e;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng)) e.emplace_back(u, v);
        Graph g(n, e);
        if (!beineke_condition(g)) continue;
        auto r = edge_chromatic_number_exact(g);
        ASSERT_TRUE(r.exact());
        EXPECT_EQ(r.upper, g.max_degree()) << "trial " << trial;
    }
}

TEST(Predictions, Examples) {
    auto p = predictions(RingSpec::from_t({2, 2}));
    EXPECT_EQ(p.omega, 3u);
    EXPECT_EQ(p.chi, 3u);
    EXPECT_EQ(p.chi_prime, 2u);
    p = predictions(RingSpec::from_t({1, 1, 1, 1}));
    EXPECT_EQ(p.omega, 3u);
    EXPECT_EQ(p.chi_prime, 6u);
    EXPECT_EQ(predictions(RingSpec::from_t({2, 1, 3})).omega, 4u);
}

TEST(ProductColoring, IsProperWithinBound) {
    for (const auto& ts : specs()) {
        auto spec = RingSpec::from_t(ts);
        auto pc = product_coloring(spec);
        auto g = build_digraph(spec);
        EXPECT_TRUE(is_proper_vertex_coloring(g.underlying, pc.colors)) << spec.profile_string();
        EXPECT_LE(pc.color_count, pc.bound);
        EXPECT_EQ(pc.color_count, count_colors(pc.colors));
    }
    EXPECT_EQ(product_coloring(RingSpec::from_t({2, 2})).bound, 7u);
    EXPECT_EQ(product_coloring(RingSpec::from_t({1, 1, 1})).bound, 6u);
}

TEST(Analyze, Z36FlagsChromaticIndexOnly) {
    for (const auto& r : {analyze(RingSpec::from_t({2, 2})), analyze(factor_modulus(36))}) {
        EXPECT_EQ(r.vertices, 7u);
        EXPECT_EQ(r.edges, 6u);
        EXPECT_EQ(r.omega.value(), 3u);
        EXPECT_EQ(r.chi.value(), 3u);
        EXPECT_EQ(r.chi_prime.value(), 3u);
        EXPECT_EQ(r.mismatches, (std::vector<Mismatch>{{"chi_prime", 2, 3}}));
        EXPECT_TRUE(r.unresolved.empty());
        EXPECT_TRUE(r.degree_formula_ok && r.antisymmetric && r.acyclic && r.product_proper);
    }
    EXPECT_EQ(analyze(factor_modulus(36)).ring, "Z_36");
    EXPECT_EQ(analyze(RingSpec::from_t({2, 2})).ring, "profile 2,2");
}

TEST(Analyze, ReducedAndLocalAreClean) {
    auto r = analyze(RingSpec::from_t({1, 1, 1, 1}));
    EXPECT_FALSE(r.has_mismatch());
    EXPECT_EQ(r.chi_prime.value(), 6u);
    auto local = analyze(RingSpec::from_t({3}));
    EXPECT_FALSE(local.has_mismatch());
    EXPECT_EQ(local.vertices, 2u);
    EXPECT_EQ(local.edges, 0u);
    EXPECT_EQ(local.chi_prime.value(), 0u);
    EXPECT_THROW(analyze(RingSpec::from_t({1})), DomainRingError);
}

TEST(Analyze, SkippedQuantitiesAreNotCompared) {
    AnalyzeOptions opt;
    opt.exact_chi_prime = false;
    auto r = analyze(RingSpec::from_t({2, 2}), opt);
    EXPECT_FALSE(r.chi_prime.computed);
    EXPECT_FALSE(r.has_mismatch());
    auto j = to_json(r);
    EXPECT_TRUE(j["chi_prime_exact"].is_null());
    EXPECT_FALSE(j["methods"].contains("chi_prime"));
}

TEST(Analyze, OversizeThrows) {
    AnalyzeOptions opt;
    opt.vertex_limit = 100;
    EXPECT_THROW(analyze(RingSpec::from_t({4, 4, 4}), opt), GraphTooLarge);
}

TEST(Report, JsonShape) {
    auto j = to_json(analyze(factor_modulus(36)));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{
                        "ring", "profile", "factors", "fields", "reduced", "vertices", "edges", "arcs", "delta",
                        "max_degree_vertex_count", "degree_formula_ok", "omega_exact", "omega_predicted",
                        "chi_exact", "chi_predicted", "chi_prime_exact", "chi_prime_predicted", "beineke",
                        "intervals", "methods", "case_formulas", "product_coloring", "structure", "mismatches",
                        "unresolved", "timings"}));
    ASSERT_EQ(j["mismatches"].size(), 1u);
    EXPECT_EQ(j["mismatches"][0]["flag"], "THEOREM_MISMATCH");
    EXPECT_EQ(j["mismatches"][0]["quantity"], "chi_prime");
    EXPECT_EQ(j["chi_prime_exact"], 3);
    EXPECT_EQ(j["case_formulas"]["case"], "two-factor");
    EXPECT_EQ(report_status(analyze(factor_modulus(36))), "mismatch");
    EXPECT_EQ(report_status(analyze(factor_modulus(30))), "verified");
}
