#ifndef TREEDENS_TESTS_SUPPORT_HPP
#define TREEDENS_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "treedens/forest.hpp"
#include "treedens/graph.hpp"

namespace treedens::testing {

/// mt19937_64 is pinned by the standard, so seeded corpora are portable;
/// modulo reduction keeps draws implementation-independent.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    int uniform(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool chance(int numerator, int denominator) { return uniform(1, denominator) <= numerator; }

private:
    std::mt19937_64 engine_;
};

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

inline Graph star_graph(int leaves) { // center 0
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, edges);
}

inline Graph complete_bipartite(int s, int t) {
    std::vector<Edge> edges;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) edges.emplace_back(i, s + j);
    return Graph::from_edges(s + t, edges);
}

/// Legs of length 1, 1, 2 hanging off vertex 0.
inline Graph spider_112() {
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
}

inline Graph random_tree(Rng& rng, int n) {
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(rng.uniform(0, i - 1), i);
    return Graph::from_edges(n, edges);
}

inline Graph random_forest(Rng& rng, int n) {
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i)
        if (!rng.chance(1, 4)) edges.emplace_back(rng.uniform(0, i - 1), i);
    return Graph::from_edges(n, edges);
}

inline Graph random_graph(Rng& rng, int n, int percent) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(percent, 100)) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

inline bool is_stable_set(const Graph& g, const VertexSet& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (g.adjacent(set[i], set[j])) return false;
    return true;
}

/// Exhaustive alpha_s oracle: largest stable subset of {v : deg(v) <= s},
/// by direct subset enumeration. Independent of the tree DP.
inline int oracle_alpha_s(const Graph& t, int s) {
    std::vector<int> low;
    for (int v = 0; v < t.vertex_count(); ++v)
        if (t.degree(v) <= s) low.push_back(v);
    const int m = static_cast<int>(low.size());
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && t.adjacent(low[static_cast<std::size_t>(i)], low[static_cast<std::size_t>(j)]))
                adj[static_cast<std::size_t>(i)] |= std::uint64_t(1) << j;
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        bool stable = true;
        for (int i = 0; stable && i < m; ++i)
            if ((mask >> i & 1) && (adj[static_cast<std::size_t>(i)] & mask)) stable = false;
        if (stable) best = std::max(best, static_cast<int>(std::popcount(mask)));
    }
    return best;
}

/// |Aut| by brute force over all vertex permutations (n <= 8).
inline std::uint64_t oracle_automorphisms(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (int u = 0; ok && u < n; ++u)
            for (int v = u + 1; ok && v < n; ++v)
                if (g.adjacent(u, v) !=
                    g.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
                    ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

/// Degeneracy oracle: max over all induced subgraphs of the minimum degree
/// (n <= 20 or so).
inline int oracle_degeneracy(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        int min_deg = n;
        for (int v = 0; v < n; ++v) {
            if (!(mask >> v & 1)) continue;
            int deg = 0;
            for (int w : g.neighbors(v))
                if (mask >> w & 1) ++deg;
            min_deg = std::min(min_deg, deg);
        }
        best = std::max(best, min_deg);
    }
    return best;
}

} // namespace treedens::testing

#endif
