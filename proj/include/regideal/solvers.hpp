#pragma once

// Exact solvers for clique number, chromatic number and chromatic index of a
// simple graph. All searches are deterministic: ties break on the lowest
// vertex (or edge) index and the only randomness is a fixed-seed local search
// used to find upper-bound colourings. A run that hits its deadline reports
// the interval it has proven instead of a value.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "regideal/graph.hpp"

namespace regideal {

class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    Deadline() : end_(Clock::time_point::max()) {}
    explicit Deadline(std::chrono::duration<double> budget)
        : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(budget)) {}

    static Deadline never() { return Deadline(); }
    static Deadline in_seconds(double s) { return Deadline(std::chrono::duration<double>(s)); }

    bool expired() const { return end_ != Clock::time_point::max() && Clock::now() >= end_; }

private:
    Clock::time_point end_;
};

struct CliqueResult {
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::vector<Vertex> clique; // witness of size `lower`
    bool timed_out = false;
    double seconds = 0;

    bool exact() const noexcept { return lower == upper; }
};

struct ColoringResult {
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::vector<int> colors; // witness using `upper` colours; per vertex, or per edge in Graph::edges() order
    bool timed_out = false;
    double seconds = 0;
    std::string method;

    bool exact() const noexcept { return lower == upper; }
};

// ---------------------------------------------------------------------------
// Independent checkers.

inline bool is_clique(const Graph& g, const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j] || !g.adjacent(vs[i], vs[j])) return false;
    return true;
}

inline bool is_proper_vertex_coloring(const Graph& g, const std::vector<int>& colors) {
    if (colors.size() != g.size()) return false;
    for (auto c : colors)
        if (c < 0) return false;
    for (const auto& [u, v] : g.edges())
        if (colors[u] == colors[v]) return false;
    return true;
}

inline bool is_proper_edge_coloring(const Graph& g, const std::vector<int>& colors) {
    if (colors.size() != g.edge_count()) return false;
    std::vector<std::vector<int>> seen(g.size());
    for (std::size_t e = 0; e < colors.size(); ++e) {
        if (colors[e] < 0) return false;
        for (auto x : {g.edges()[e].first, g.edges()[e].second}) {
            auto& s = seen[x];
            if (std::find(s.begin(), s.end(), colors[e]) != s.end()) return false;
            s.push_back(colors[e]);
        }
    }
    return true;
}

inline std::size_t count_colors(const std::vector<int>& colors) {
    auto c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
}

namespace detail {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Fixed-width bitset over the vertices of one graph.
class Bits {
public:
    explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}

    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    bool none() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }

    /// Lowest set bit; the set must be nonempty.
    std::size_t first() const {
        for (std::size_t i = 0;; ++i)
            if (w_[i]) return i * 64 + static_cast<std::size_t>(__builtin_ctzll(w_[i]));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
        return c;
    }

    Bits operator&(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
        return r;
    }

    Bits& and_not(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            for (auto x = w_[i]; x; x &= x - 1) f(i * 64 + static_cast<std::size_t>(__builtin_ctzll(x)));
    }

private:
    std::vector<std::uint64_t> w_;
};

/// Branch and bound with greedy colouring bounds over bitsets.
class MaxCliqueSearch {
public:
    MaxCliqueSearch(const Graph& g, const Deadline& deadline) : g_(g), deadline_(deadline) {
        const auto n = g.size();
        order_.resize(n);
        for (Vertex v = 0; v < n; ++v) order_[v] = v;
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        std::vector<std::size_t> pos(n);
        for (std::size_t i = 0; i < n; ++i) pos[order_[i]] = i;
        adj_.assign(n, Bits(n));
        for (const auto& [u, v] : g.edges()) {
            adj_[pos[u]].set(pos[v]);
            adj_[pos[v]].set(pos[u]);
        }
    }

    CliqueResult run() {
        detail::Stopwatch sw;
        const auto n = g_.size();
        CliqueResult r;
        if (n == 0) return r;
        Bits all(n);
        for (std::size_t i = 0; i < n; ++i) all.set(i);
        std::vector<std::size_t> verts, bounds;
        color_sort(all, verts, bounds);
        root_bound_ = bounds.empty() ? 0 : bounds.back();
        best_ = {0}; // any single vertex
        current_.clear();
        expand(all);
        r.clique.clear();
        for (auto i : best_) r.clique.push_back(order_[i]);
        std::sort(r.clique.begin(), r.clique.end());
        r.lower = r.clique.size();
        r.upper = timed_out_ ? std::max(root_bound_, r.lower) : r.lower;
        r.timed_out = timed_out_;
        r.seconds = sw.seconds();
        return r;
    }

private:
    void color_sort(const Bits& p, std::vector<std::size_t>& verts, std::vector<std::size_t>& bounds) const {
        verts.clear();
        bounds.clear();
        Bits uncolored = p;
        std::size_t color = 0;
        while (!uncolored.none()) {
            ++color;
            Bits q = uncolored;
            while (!q.none()) {
                auto v = q.first();
                q.reset(v);
                q.and_not(adj_[v]);
                uncolored.reset(v);
                verts.push_back(v);
                bounds.push_back(color);
            }
        }
    }

    void expand(Bits p) {
        if (timed_out_) return;
        if ((++nodes_ & 1023) == 0 && deadline_.expired()) {
            timed_out_ = true;
            return;
        }
        std::vector<std::size_t> verts, bounds;
        color_sort(p, verts, bounds);
        for (std::size_t i = verts.size(); i-- > 0;) {
            if (current_.size() + bounds[i] <= best_.size() || timed_out_) return;
            auto v = verts[i];
            current_.push_back(v);
            Bits np = p & adj_[v];
            if (np.none()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(np);
            }
            current_.pop_back();
            p.reset(v);
        }
    }

    const Graph& g_;
    const Deadline& deadline_;
    std::vector<Vertex> order_;
    std::vector<Bits> adj_;
    std::vector<std::size_t> current_, best_;
    std::size_t root_bound_ = 0;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

} // namespace detail

/// Maximum clique of the graph. A nonempty graph has clique number at least 1.
inline CliqueResult clique_number_exact(const Graph& g, const Deadline& deadline = Deadline::never()) {
    return detail::MaxCliqueSearch(g, deadline).run();
}

// ---------------------------------------------------------------------------
// Vertex colouring.

namespace detail {

/// Greedy DSATUR: pick the uncoloured vertex with most distinct neighbour
/// colours, then highest degree, then lowest index; give it the smallest free colour.
inline std::vector<int> dsatur_greedy(const Graph& g) {
    const auto n = g.size();
    std::vector<int> color(n, -1);
    std::vector<std::vector<char>> nb_has(n);
    std::vector<std::size_t> sat(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = 0;
        bool have = false;
        for (Vertex v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            if (!have || sat[v] > sat[best] || (sat[v] == sat[best] && g.degree(v) > g.degree(best))) {
                best = v;
                have = true;
            }
        }
        int c = 0;
        while (c < static_cast<int>(nb_has[best].size()) && nb_has[best][c]) ++c;
        color[best] = c;
        for (auto w : g.neighbors(best)) {
            auto& h = nb_has[w];
            if (h.size() <= static_cast<std::size_t>(c)) h.resize(c + 1, 0);
            if (!h[c]) {
                h[c] = 1;
                ++sat[w];
            }
        }
    }
    return color;
}

class ColoringSearch {
public:
    ColoringSearch(const Graph& g, const Deadline& deadline) : g_(g), deadline_(deadline) {}

    /// Tries to improve on `best` colours (with witness `best_colors`); the
    /// clique is precoloured 0..|clique|-1.
    void run(const std::vector<Vertex>& clique, std::size_t lower, std::size_t& best, std::vector<int>& best_colors) {
        const auto n = g_.size();
        lower_ = lower;
        best_ = &best;
        best_colors_ = &best_colors;
        k_ = best;
        color_.assign(n, -1);
        count_.assign(n * k_, 0);
        sat_.assign(n, 0);
        std::size_t colored = 0;
        int used = 0;
        for (auto v : clique) {
            assign(v, used++);
            ++colored;
        }
        search(colored, used);
    }

    bool timed_out() const { return timed_out_; }

private:
    void assign(Vertex v, int c) {
        color_[v] = c;
        for (auto w : g_.neighbors(v))
            if (count_[w * k_ + c]++ == 0) ++sat_[w];
    }

    void unassign(Vertex v) {
        int c = color_[v];
        color_[v] = -1;
        for (auto w : g_.neighbors(v))
            if (--count_[w * k_ + c] == 0) --sat_[w];
    }

    void search(std::size_t colored, int used) {
        if (timed_out_ || *best_ <= lower_) return;
        if ((++nodes_ & 1023) == 0 && deadline_.expired()) {
            timed_out_ = true;
            return;
        }
        if (colored == g_.size()) {
            *best_ = static_cast<std::size_t>(used);
            *best_colors_ = color_;
            return;
        }
        Vertex v = 0;
        bool have = false;
        for (Vertex u = 0; u < g_.size(); ++u) {
            if (color_[u] >= 0) continue;
            if (!have || sat_[u] > sat_[v] || (sat_[u] == sat_[v] && g_.degree(u) > g_.degree(v))) {
                v = u;
                have = true;
            }
        }
        // colour c is only worth trying if the result can beat the incumbent
        for (int c = 0; c <= used && c + 1 < static_cast<int>(*best_); ++c) {
            if (count_[v * k_ + c]) continue;
            assign(v, c);
            search(colored + 1, std::max(used, c + 1));
            unassign(v);
            if (timed_out_ || *best_ <= lower_) return;
        }
    }

    const Graph& g_;
    const Deadline& deadline_;
    std::size_t lower_ = 0;
    std::size_t* best_ = nullptr;
    std::vector<int>* best_colors_ = nullptr;
    std::size_t k_ = 0;
    std::vector<int> color_;
    std::vector<std::uint32_t> count_;
    std::vector<std::size_t> sat_;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

} // namespace detail

/// Chromatic number by DSATUR branch and bound, lower-bounded by a maximum
/// clique. If `clique` is supplied it must be a clique of g.
inline ColoringResult chromatic_number_exact(const Graph& g, const Deadline& deadline = Deadline::never(),
                                             std::optional<CliqueResult> clique = std::nullopt) {
    detail::Stopwatch sw;
    ColoringResult r;
    if (g.size() == 0) {
        r.method = "empty";
        return r;
    }
    if (!clique) clique = clique_number_exact(g, deadline);
    r.lower = std::max<std::size_t>(clique->lower, 1);
    r.colors = detail::dsatur_greedy(g);
    r.upper = count_colors(r.colors);
    r.method = "dsatur";
    if (r.upper > r.lower) {
        detail::ColoringSearch search(g, deadline);
        std::size_t best = r.upper;
        search.run(clique->clique, r.lower, best, r.colors);
        r.upper = best;
        r.method = "branch-and-bound";
        if (search.timed_out() && r.upper > r.lower) r.timed_out = true;
        else r.lower = r.upper;
    }
    r.seconds = sw.seconds();
    return r;
}

// ---------------------------------------------------------------------------
// Edge colouring.

namespace detail {

/// Partial proper edge colouring with k colours supporting Kempe-chain swaps.
class EdgePalette {
public:
    EdgePalette(const Graph& g, int k)
        : g_(g), k_(k), color_(g.edge_count(), -1), at_(g.size() * static_cast<std::size_t>(k), -1) {}

    int k() const { return k_; }
    int color(std::size_t e) const { return color_[e]; }
    const std::vector<int>& colors() const { return color_; }
    int edge_at(Vertex x, int c) const { return at_[x * k_ + c]; }
    bool is_free(Vertex x, int c) const { return edge_at(x, c) < 0; }

    void paint(std::size_t e, int c) {
        color_[e] = c;
        const auto& [u, v] = g_.edges()[e];
        at_[u * k_ + c] = static_cast<int>(e);
        at_[v * k_ + c] = static_cast<int>(e);
    }

    void erase(std::size_t e) {
        int c = color_[e];
        if (c < 0) return;
        const auto& [u, v] = g_.edges()[e];
        at_[u * k_ + c] = -1;
        at_[v * k_ + c] = -1;
        color_[e] = -1;
    }

    std::vector<int> free_colors(Vertex x) const {
        std::vector<int> f;
        for (int c = 0; c < k_; ++c)
            if (is_free(x, c)) f.push_back(c);
        return f;
    }

    Vertex other(std::size_t e, Vertex x) const {
        const auto& [u, v] = g_.edges()[e];
        return u == x ? v : u;
    }

    /// The a/b alternating path leaving `start` along its a-edge; returns the
    /// edges and the far endpoint.
    std::pair<std::vector<std::size_t>, Vertex> chain(Vertex start, int a, int b) const {
        std::vector<std::size_t> path;
        Vertex x = start;
        int want = a;
        while (true) {
            int e = edge_at(x, want);
            if (e < 0) break;
            path.push_back(static_cast<std::size_t>(e));
            x = other(static_cast<std::size_t>(e), x);
            want = want == a ? b : a;
        }
        return {path, x};
    }

    void flip(const std::vector<std::size_t>& path, int a, int b) {
        std::vector<int> old;
        for (auto e : path) {
            old.push_back(color_[e]);
            erase(e);
        }
        for (std::size_t i = 0; i < path.size(); ++i) paint(path[i], old[i] == a ? b : a);
    }

    /// Deterministic attempt: common free colour, else one Kempe swap at either end.
    bool try_color(std::size_t e) {
        const auto [u, v] = g_.edges()[e];
        for (int c = 0; c < k_; ++c)
            if (is_free(u, c) && is_free(v, c)) {
                paint(e, c);
                return true;
            }
        auto fu = free_colors(u), fv = free_colors(v);
        for (int a : fu)
            for (int b : fv) {
                auto [path, end] = chain(v, a, b);
                if (end != u) {
                    flip(path, a, b);
                    paint(e, a);
                    return true;
                }
                auto [path2, end2] = chain(u, b, a);
                if (end2 != v) {
                    flip(path2, b, a);
                    paint(e, b);
                    return true;
                }
            }
        return false;
    }

private:
    const Graph& g_;
    int k_;
    std::vector<int> color_;
    std::vector<int> at_;
};

/// Kempe-chain greedy followed by a fixed-seed random walk that swaps chains
/// or evicts a neighbouring edge. Returns a complete k-colouring if found.
inline std::optional<std::vector<int>> kempe_edge_coloring(const Graph& g, int k, const Deadline& deadline,
                                                           std::uint64_t max_steps) {
    const auto m = g.edge_count();
    if (m == 0) return std::vector<int>{};
    if (k < static_cast<int>(g.max_degree())) return std::nullopt;
    EdgePalette pal(g, k);

    std::vector<std::size_t> order(m);
    for (std::size_t e = 0; e < m; ++e) order[e] = e;
    auto weight = [&](std::size_t e) {
        return std::max(g.degree(g.edges()[e].first), g.degree(g.edges()[e].second));
    };
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return weight(a) > weight(b); });

    std::vector<std::size_t> pending;
    for (auto e : order)
        if (!pal.try_color(e)) pending.push_back(e);

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ m);
    std::uint64_t steps = 0;
    while (!pending.empty()) {
        if (++steps > max_steps || ((steps & 255) == 0 && deadline.expired())) return std::nullopt;
        std::size_t slot = rng() % pending.size();
        std::size_t e = pending[slot];
        const auto [u, v] = g.edges()[e];
        auto fu = pal.free_colors(u), fv = pal.free_colors(v);
        int common = -1;
        for (int c : fu)
            if (pal.is_free(v, c)) {
                common = c;
                break;
            }
        if (common >= 0) {
            pal.paint(e, common);
            pending[slot] = pending.back();
            pending.pop_back();
            continue;
        }
        int a = fu[rng() % fu.size()];
        int b = fv[rng() % fv.size()];
        Vertex x = v, y = u;
        if (rng() & 1) {
            std::swap(x, y);
            std::swap(a, b);
        }
        // here y misses a, x misses b
        auto [path, end] = pal.chain(x, a, b);
        if (end != y && (rng() % 8) != 0) {
            pal.flip(path, a, b);
        } else {
            auto evict = static_cast<std::size_t>(pal.edge_at(x, a));
            pal.erase(evict);
            pending.push_back(evict);
        }
        pal.paint(e, a);
        pending[slot] = pending.back();
        pending.pop_back();
    }
    return pal.colors();
}

/// Exhaustive search for a k-edge-colouring (DSATUR order on edges). Edges at
/// a maximum-degree vertex are precoloured 0..deg-1.
class EdgeColoringSearch {
public:
    EdgeColoringSearch(const Graph& g, int k, const Deadline& deadline) : g_(g), pal_(g, k), deadline_(deadline) {}

    enum class Outcome { Found, Impossible, TimedOut };

    Outcome run() {
        const auto m = g_.edge_count();
        if (m == 0) return Outcome::Found;
        Vertex hub = 0;
        for (Vertex v = 0; v < g_.size(); ++v)
            if (g_.degree(v) > g_.degree(hub)) hub = v;
        if (static_cast<int>(g_.degree(hub)) > pal_.k()) return Outcome::Impossible;
        std::size_t colored = 0;
        int c = 0;
        for (std::size_t e = 0; e < m; ++e) {
            const auto& [u, v] = g_.edges()[e];
            if (u == hub || v == hub) {
                pal_.paint(e, c++);
                ++colored;
            }
        }
        if (search(colored)) return Outcome::Found;
        return timed_out_ ? Outcome::TimedOut : Outcome::Impossible;
    }

    const std::vector<int>& colors() const { return pal_.colors(); }

private:
    bool search(std::size_t colored) {
        if ((++nodes_ & 1023) == 0 && deadline_.expired()) timed_out_ = true;
        if (timed_out_) return false;
        const auto m = g_.edge_count();
        if (colored == m) return true;
        std::size_t pick = m;
        int pick_avail = std::numeric_limits<int>::max();
        for (std::size_t e = 0; e < m; ++e) {
            if (pal_.color(e) >= 0) continue;
            const auto& [u, v] = g_.edges()[e];
            int avail = 0;
            for (int c = 0; c < pal_.k(); ++c)
                if (pal_.is_free(u, c) && pal_.is_free(v, c)) ++avail;
            if (avail < pick_avail) {
                pick = e;
                pick_avail = avail;
                if (avail == 0) return false;
            }
        }
        const auto& [u, v] = g_.edges()[pick];
        for (int c = 0; c < pal_.k(); ++c) {
            if (!pal_.is_free(u, c) || !pal_.is_free(v, c)) continue;
            pal_.paint(pick, c);
            if (search(colored + 1)) return true;
            pal_.erase(pick);
            if (timed_out_) return false;
        }
        return false;
    }

    const Graph& g_;
    EdgePalette pal_;
    const Deadline& deadline_;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

/// A component with more edges than Δ(G) * floor(n_c / 2) cannot be
/// Δ(G)-edge-coloured: every colour class is a matching.
inline bool has_overfull_component(const Graph& g) {
    const auto delta = g.max_degree();
    for (const auto& comp : g.components()) {
        std::size_t twice_edges = 0;
        for (auto v : comp) twice_edges += g.degree(v);
        if (twice_edges / 2 > delta * (comp.size() / 2)) return true;
    }
    return false;
}

} // namespace detail

/// Chromatic index: Δ or Δ+1. Class 2 is proven either by an overfull
/// component or by exhausting the Δ-colour search; class 1 by a witness.
inline ColoringResult edge_chromatic_number_exact(const Graph& g, const Deadline& deadline = Deadline::never()) {
    detail::Stopwatch sw;
    ColoringResult r;
    const auto delta = g.max_degree();
    r.lower = delta;
    r.upper = delta + 1;
    if (g.edge_count() == 0) {
        r.upper = 0;
        r.method = "edgeless";
        return r;
    }
    const int k = static_cast<int>(delta);
    const std::uint64_t budget = 200 * g.edge_count() + 200'000;

    auto finish_class_two = [&](const char* method) {
        r.lower = r.upper = delta + 1;
        r.method = method;
        if (auto w = detail::kempe_edge_coloring(g, k + 1, deadline, budget)) r.colors = std::move(*w);
    };

    if (detail::has_overfull_component(g)) {
        finish_class_two("overfull");
    } else if (auto w = detail::kempe_edge_coloring(g, k, deadline, budget)) {
        r.upper = delta;
        r.colors = std::move(*w);
        r.method = "kempe";
    } else {
        detail::EdgeColoringSearch search(g, k, deadline);
        switch (search.run()) {
        case detail::EdgeColoringSearch::Outcome::Found:
            r.upper = delta;
            r.colors = search.colors();
            r.method = "search";
            break;
        case detail::EdgeColoringSearch::Outcome::Impossible:
            finish_class_two("search");
            break;
        case detail::EdgeColoringSearch::Outcome::TimedOut:
            r.timed_out = true;
            r.method = "timeout";
            break;
        }
    }
    r.seconds = sw.seconds();
    return r;
}

} // namespace regideal
