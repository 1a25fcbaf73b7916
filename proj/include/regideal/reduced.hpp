#pragma once

// Reduced rings. A reduced Artinian ring with n minimal primes is a product of
// n fields, and its regular graph of ideals is the comparability graph of the
// Boolean lattice on n coordinates with top and bottom removed.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "regideal/errors.hpp"
#include "regideal/graph.hpp"
#include "regideal/invariants.hpp"
#include "regideal/ring_model.hpp"

namespace regideal {

using SubsetMask = std::uint32_t; // bit i set <=> coordinate i in the support

struct BooleanGraph {
    std::size_t n = 0;
    std::vector<SubsetMask> masks; // nonempty proper subsets, ascending
    RegDigraph digraph;            // arcs from superset to subset
};

inline BooleanGraph boolean_graph(std::size_t n, std::uint64_t vertex_limit = kDefaultVertexLimit) {
    if (n < 2) throw SpecError("boolean graph needs at least two minimal primes");
    if (n >= 32) throw GraphTooLarge(std::uint64_t{1} << std::min<std::size_t>(n, 63), vertex_limit);
    const SubsetMask top = (SubsetMask{1} << n) - 1;
    detail::check_limit(std::uint64_t{top} - 1, vertex_limit);

    BooleanGraph b;
    b.n = n;
    for (SubsetMask s = 1; s < top; ++s) b.masks.push_back(s);
    const auto count = b.masks.size();

    std::vector<IdealVector> vertices;
    std::vector<std::string> labels;
    std::vector<std::vector<Vertex>> out(count);
    for (Vertex i = 0; i < count; ++i) {
        const auto s = b.masks[i];
        std::vector<IdealClass> cls;
        for (std::size_t k = 0; k < n; ++k) cls.push_back((s >> k) & 1 ? IdealClass::full() : IdealClass::zero());
        vertices.emplace_back(std::move(cls));
        labels.push_back(std::to_string(s));
        for (Vertex j = 0; j < count; ++j) {
            const auto t = b.masks[j];
            if (t != s && (t & ~s) == 0) out[i].push_back(j);
        }
    }
    b.digraph = detail::assemble(std::move(vertices), std::move(out), std::move(labels));
    return b;
}

struct PrimeIdeal {
    std::uint64_t generator = 0;

    std::string to_string() const { return "(" + std::to_string(generator) + ")"; }
    friend bool operator==(const PrimeIdeal&, const PrimeIdeal&) = default;
};

/// Minimal primes of Z_n: one (p) per distinct prime factor. For squarefree n
/// they are also the maximal ideals and Z_n is its own total ring of fractions.
inline std::vector<PrimeIdeal> minimal_primes_zn(const ZnContext& ctx) {
    std::vector<PrimeIdeal> out;
    for (const auto& pk : ctx.factorization()) out.push_back({pk.prime});
    return out;
}

inline bool is_squarefree(const ZnContext& ctx) { return ctx.spec().is_reduced(); }

/// (ω, χ, χ') for a reduced ring with the given number of minimal primes.
inline Predictions reduced_invariants(std::size_t minimal_primes) {
    if (minimal_primes < 2) throw SpecError("reduced non-domain ring needs at least two minimal primes");
    Predictions p;
    p.omega = minimal_primes - 1;
    p.chi = p.omega;
    p.chi_prime = minimal_primes >= 3 ? (std::uint64_t{1} << (minimal_primes - 1)) - 2 : 0;
    return p;
}

} // namespace regideal
