#pragma once

// Brute-force reference computations for small graphs. Deliberately naive and
// independent of the library's search code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "regideal/graph.hpp"

namespace oracle {

using regideal::Graph;
using regideal::Vertex;

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
    std::vector<std::vector<bool>> m(g.size(), std::vector<bool>(g.size(), false));
    for (const auto& [u, v] : g.edges()) m[u][v] = m[v][u] = true;
    return m;
}

/// Largest subset that is pairwise adjacent, by enumerating all subsets (n <= 20).
inline std::size_t clique_number(const Graph& g) {
    const auto n = g.size();
    auto m = matrix(g);
    std::size_t best = 0;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        auto size = static_cast<std::size_t>(__builtin_popcount(s));
        if (size <= best) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if ((s >> i & 1) && (s >> j & 1) && !m[i][j]) ok = false;
        if (ok) best = size;
    }
    return best;
}

/// Smallest k admitting a proper vertex colouring, by trying every assignment.
inline std::size_t chromatic_number(const Graph& g) {
    const auto n = g.size();
    if (n == 0) return 0;
    for (std::size_t k = 1;; ++k) {
        std::vector<std::size_t> c(n, 0);
        while (true) {
            bool ok = true;
            for (const auto& [u, v] : g.edges())
                if (c[u] == c[v]) ok = false;
            if (ok) return k;
            std::size_t i = 0;
            while (i < n && ++c[i] == k) c[i++] = 0;
            if (i == n) break;
        }
    }
}

/// Smallest k admitting a proper edge colouring, by trying every assignment.
inline std::size_t edge_chromatic_number(const Graph& g) {
    const auto& e = g.edges();
    const auto m = e.size();
    if (m == 0) return 0;
    for (std::size_t k = 1;; ++k) {
        std::vector<std::size_t> c(m, 0);
        while (true) {
            bool ok = true;
            for (std::size_t a = 0; a < m && ok; ++a)
                for (std::size_t b = a + 1; b < m && ok; ++b) {
                    bool share = e[a].first == e[b].first || e[a].first == e[b].second ||
                                 e[a].second == e[b].first || e[a].second == e[b].second;
                    if (share && c[a] == c[b]) ok = false;
                }
            if (ok) return k;
            std::size_t i = 0;
            while (i < m && ++c[i] == k) c[i++] = 0;
            if (i == m) break;
        }
    }
}

/// Isomorphism by trying every vertex permutation (n <= 9).
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    auto mb = matrix(b);
    std::vector<Vertex> p(a.size());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (const auto& [u, v] : a.edges())
            if (!mb[p[u]][p[v]]) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline Graph cycle(std::size_t n) {
    std::vector<regideal::Edge> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph(n, e);
}

inline Graph complete(std::size_t n) {
    std::vector<regideal::Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

inline Graph star(std::size_t leaves) {
    std::vector<regideal::Edge> e;
    for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

inline Graph petersen() {
    std::vector<regideal::Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph(10, e);
}

} // namespace oracle
