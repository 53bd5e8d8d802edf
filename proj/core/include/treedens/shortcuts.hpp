#ifndef TREEDENS_SHORTCUTS_HPP
#define TREEDENS_SHORTCUTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "treedens/graph.hpp"

namespace treedens {

/// A set of non-trivial paths in a base graph; endpoints of each path become
/// edges of the expansion.
struct ShortcutSystem {
    Graph base;
    std::vector<std::vector<int>> paths;
};

struct ShortcutProfile {
    int max_length = 0;        // k: longest path (edge count)
    int max_internal_load = 0; // d: most paths through one vertex internally
    int max_m_set = 0;         // d*: largest M_v = endpoints of paths through v
};

/// Checks every sequence is a path of the base (consecutive adjacency, no
/// repeats, length >= 1) and measures the profile.
ShortcutProfile validate_shortcut_system(const ShortcutSystem& sys);

/// Endpoints of paths internally through v.
VertexSet m_set(const ShortcutSystem& sys, int v);

/// The base plus the endpoint edge of every shortcut, simplified.
Graph expand(const ShortcutSystem& sys);

/// G plus a clique on N(v) for every vertex of degree <= d, together with the
/// witnessing system {u v w : deg(v) <= d, u < w in N(v)}; expanding the
/// system reproduces the graph exactly.
std::pair<Graph, ShortcutSystem> build_low_degree_square(const Graph& g, int d);

/// Branch sets of a complete bipartite model: left sets of size <= p, right
/// sets of size <= q, all disjoint, connected, and pairwise joined.
struct BipartiteModel {
    std::vector<VertexSet> left;
    std::vector<VertexSet> right;
    int p = 1;
    int q = 1;
};

struct ModelVerdict {
    bool valid = false;
    std::optional<std::string> violation;
};

ModelVerdict verify_model(const Graph& g, const BipartiteModel& model, int s, int t, int p, int q);

/// Pulls a (p,q)-model of K_{s',t'} in the expansion back to a model of
/// K_{s,t} in the base, where s' = (d(k-1)(p-1)+1)(s-1)+1 and
/// t' = (2d(k-1)(s+q-1)+1)(t-1)+1+sd(p+(k-1)(p-1)). The output is a
/// (p+(k-1)(p-1), q+(k-1)(s+q-1))-model, validated before returning.
BipartiteModel transfer_model(const ShortcutSystem& sys, const BipartiteModel& model, int s, int t,
                              int p, int q, int k, int d);

/// The left/right set counts the transfer preconditions demand.
int transfer_required_left(int s, int p, int k, int d);
int transfer_required_right(int s, int t, int p, int q, int k, int d);

} // namespace treedens

#endif
