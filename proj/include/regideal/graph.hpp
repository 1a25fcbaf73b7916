#pragma once

// The regular digraph of ideals and its underlying simple graph.
//
// Arc rule for a product of Artinian local rings: I -> J iff in every factor
// the component of I is the whole factor or the component of J is zero.
// For Z_n a second, element-level route is provided (annihilator/lcm test and
// an exhaustive regular-element scan) so the two constructions can be compared.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "regideal/errors.hpp"
#include "regideal/ring_model.hpp"

namespace regideal {

inline constexpr std::uint64_t kDefaultVertexLimit = 50'000;

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph with sorted adjacency lists.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list; duplicates and orientation are ignored, loops rejected.
    Graph(std::size_t vertex_count, std::vector<Edge> edges) : adj_(vertex_count) {
        for (auto& [u, v] : edges) {
            if (u == v) throw std::invalid_argument("self-loop in simple graph");
            if (u >= vertex_count || v >= vertex_count) throw std::out_of_range("edge endpoint out of range");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        for (const auto& [u, v] : edges) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
        edges_ = std::move(edges);
    }

    std::size_t size() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

    std::size_t max_degree() const noexcept {
        std::size_t d = 0;
        for (const auto& a : adj_) d = std::max(d, a.size());
        return d;
    }

    bool adjacent(Vertex u, Vertex v) const {
        const auto& a = adj_.at(u);
        return std::binary_search(a.begin(), a.end(), v);
    }

    /// Connected components, each sorted; components ordered by smallest vertex.
    std::vector<std::vector<Vertex>> components() const {
        std::vector<int> seen(size(), 0);
        std::vector<std::vector<Vertex>> out;
        for (Vertex s = 0; s < size(); ++s) {
            if (seen[s]) continue;
            std::vector<Vertex> comp{s}, stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                for (auto w : adj_[v])
                    if (!seen[w]) {
                        seen[w] = 1;
                        comp.push_back(w);
                        stack.push_back(w);
                    }
            }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
        return out;
    }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
};

struct RegDigraph {
    std::vector<IdealVector> vertices; // enumeration order
    std::vector<std::vector<Vertex>> out; // sorted successor lists
    std::vector<std::vector<Vertex>> in;  // sorted predecessor lists
    Graph underlying;
    std::vector<std::string> labels; // divisor values for Z_n, class tuples otherwise

    std::size_t size() const noexcept { return vertices.size(); }

    std::size_t arc_count() const noexcept {
        std::size_t c = 0;
        for (const auto& o : out) c += o.size();
        return c;
    }

    bool has_arc(Vertex u, Vertex v) const {
        const auto& o = out.at(u);
        return std::binary_search(o.begin(), o.end(), v);
    }

    std::vector<Edge> arcs() const {
        std::vector<Edge> a;
        for (Vertex u = 0; u < out.size(); ++u)
            for (auto v : out[u]) a.emplace_back(u, v);
        return a;
    }
};

/// Structural arc test: every factor has I full or J zero.
inline bool has_arc_structural(const IdealVector& from, const IdealVector& to) {
    if (from.size() != to.size()) throw SpecError("ideal vectors belong to different ring specs");
    if (from == to) throw SpecError("arc test needs two distinct ideals");
    for (std::size_t k = 0; k < from.size(); ++k)
        if (!from[k].is_full() && !to[k].is_zero()) return false;
    return true;
}

namespace detail {

inline RegDigraph assemble(std::vector<IdealVector> vertices, std::vector<std::vector<Vertex>> out,
                           std::vector<std::string> labels) {
    RegDigraph g;
    const auto n = vertices.size();
    g.in.assign(n, {});
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        std::sort(out[u].begin(), out[u].end());
        for (auto v : out[u]) {
            g.in[v].push_back(u);
            edges.emplace_back(u, v);
        }
    }
    for (auto& p : g.in) std::sort(p.begin(), p.end());
    g.vertices = std::move(vertices);
    g.out = std::move(out);
    g.underlying = Graph(n, std::move(edges));
    g.labels = std::move(labels);
    return g;
}

inline void check_limit(std::uint64_t count, std::uint64_t limit) {
    if (count > limit) throw GraphTooLarge(count, limit);
}

} // namespace detail

/// Builds the digraph from the structural rule. Successors of I are generated
/// directly: free levels on the factors where I is full, zero elsewhere.
inline RegDigraph build_digraph(const RingSpec& spec, std::uint64_t vertex_limit = kDefaultVertexLimit) {
    detail::check_limit(spec.vertex_count(), vertex_limit);
    auto vertices = enumerate_ideals(spec);
    const auto n = vertices.size();
    std::vector<std::vector<Vertex>> out(n);
    std::vector<std::string> labels;
    labels.reserve(n);

    for (Vertex u = 0; u < n; ++u) {
        const auto& I = vertices[u];
        labels.push_back(I.to_string());
        auto free = classify(I).full;
        if (free.empty()) continue;
        std::vector<IdealClass> cls(spec.size(), IdealClass::zero());
        std::vector<std::uint32_t> level(free.size(), 0);
        while (true) {
            std::size_t pos = free.size();
            while (pos > 0 && level[pos - 1] == spec.t(free[pos - 1])) level[--pos] = 0;
            if (pos == 0) break;
            ++level[pos - 1];
            for (std::size_t i = 0; i < free.size(); ++i)
                cls[free[i]] = IdealClass::from_level(level[i], spec.t(free[i]));
            IdealVector J(cls);
            if (J.all_full() || J == I) continue;
            out[u].push_back(static_cast<Vertex>(ideal_index(spec, J)));
        }
    }
    return detail::assemble(std::move(vertices), std::move(out), std::move(labels));
}

/// Structural digraph of Z_n, labelled by divisors.
inline RegDigraph build_digraph(const ZnContext& ctx, std::uint64_t vertex_limit = kDefaultVertexLimit) {
    auto g = build_digraph(ctx.spec(), vertex_limit);
    for (Vertex v = 0; v < g.size(); ++v) g.labels[v] = std::to_string(ctx.divisor_of(g.vertices[v]));
    return g;
}

namespace detail {

inline void check_divisor_pair(const ZnContext& ctx, std::uint64_t a, std::uint64_t b) {
    if (!ctx.is_nontrivial_divisor(a) || !ctx.is_nontrivial_divisor(b))
        throw SpecError("arguments must be nontrivial divisors of " + std::to_string(ctx.modulus()));
    if (a == b) throw SpecError("arc test needs two distinct ideals");
}

} // namespace detail

/// (a) -> (b) in Z_n iff (b) ∩ Ann((a)) = 0, i.e. n | lcm(b, n/a).
inline bool has_arc_zn(const ZnContext& ctx, std::uint64_t a, std::uint64_t b) {
    detail::check_divisor_pair(ctx, a, b);
    const auto n = ctx.modulus();
    return std::lcm(b, n / a) % n == 0;
}

/// Exhaustive scan for r in (a) with r*x != 0 mod n for every nonzero x in (b).
inline std::optional<std::uint64_t> regular_element_witness(const ZnContext& ctx, std::uint64_t a, std::uint64_t b) {
    detail::check_divisor_pair(ctx, a, b);
    const auto n = ctx.modulus();
    for (std::uint64_t r = 0; r < n; r += a) {
        bool regular = true;
        for (std::uint64_t x = b; x < n && regular; x += b)
            if (static_cast<unsigned __int128>(r) * x % n == 0) regular = false;
        if (regular) return r;
    }
    return std::nullopt;
}

/// Digraph of Z_n from the annihilator criterion, on the same vertex order as
/// the structural build so the two can be compared arc for arc.
inline RegDigraph build_digraph_hom(const ZnContext& ctx, std::uint64_t vertex_limit = kDefaultVertexLimit) {
    detail::check_limit(ctx.spec().vertex_count(), vertex_limit);
    auto vertices = enumerate_ideals(ctx.spec());
    const auto n = vertices.size();
    std::vector<std::uint64_t> div(n);
    std::vector<std::string> labels(n);
    for (Vertex v = 0; v < n; ++v) {
        div[v] = ctx.divisor_of(vertices[v]);
        labels[v] = std::to_string(div[v]);
    }
    std::vector<std::vector<Vertex>> out(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && has_arc_zn(ctx, div[u], div[v])) out[u].push_back(v);
    return detail::assemble(std::move(vertices), std::move(out), std::move(labels));
}

/// No pair of opposite arcs and no loops.
inline bool is_antisymmetric(const RegDigraph& g) {
    for (Vertex u = 0; u < g.size(); ++u)
        for (auto v : g.out[u])
            if (u == v || g.has_arc(v, u)) return false;
    return true;
}

/// Kahn topological order; empty optional if a directed cycle exists.
inline std::optional<std::vector<Vertex>> topological_order(const RegDigraph& g) {
    std::vector<std::size_t> indeg(g.size());
    for (Vertex v = 0; v < g.size(); ++v) indeg[v] = g.in[v].size();
    std::vector<Vertex> order, ready;
    for (Vertex v = g.size(); v-- > 0;)
        if (indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        auto u = ready.back();
        ready.pop_back();
        order.push_back(u);
        for (auto v : g.out[u])
            if (--indeg[v] == 0) ready.push_back(v);
    }
    if (order.size() != g.size()) return std::nullopt;
    return order;
}

inline bool is_acyclic(const RegDigraph& g) { return topological_order(g).has_value(); }

enum class DotMode { Digraph, Graph };

inline void write_dot(std::ostream& os, const RegDigraph& g, DotMode mode, const std::string& name = "Greg") {
    const bool directed = mode == DotMode::Digraph;
    os << (directed ? "digraph " : "graph ") << '"' << name << "\" {\n";
    for (Vertex v = 0; v < g.size(); ++v)
        os << "  v" << v << " [label=\"" << (v < g.labels.size() ? g.labels[v] : std::to_string(v)) << "\"];\n";
    if (directed) {
        for (const auto& [u, v] : g.arcs()) os << "  v" << u << " -> v" << v << ";\n";
    } else {
        for (const auto& [u, v] : g.underlying.edges()) os << "  v" << u << " -- v" << v << ";\n";
    }
    os << "}\n";
}

inline std::string to_dot(const RegDigraph& g, DotMode mode, const std::string& name = "Greg") {
    std::ostringstream os;
    write_dot(os, g, mode, name);
    return os.str();
}

} // namespace regideal
