#ifndef TREEDENS_GRAPH_HPP
#define TREEDENS_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "treedens/errors.hpp"

namespace treedens {

/// Sorted, duplicate-free list of vertex identifiers.
using VertexSet = std::vector<int>;

using Edge = std::pair<int, int>;

/// Exact rational |E(G)| / |V(G)|.
using Density = boost::rational<long long>;

/// Simple undirected graph over dense 0-based vertex identifiers.
///
/// Immutable after construction: adjacency lists are sorted, loop-free and
/// duplicate-free, and symmetric by construction. Concurrent readers are safe.
class Graph {
public:
    Graph() = default;

    /// Builds a graph, rejecting loops and duplicate edges.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges);

    /// Builds a graph, silently dropping loops and merging parallel edges.
    static Graph from_edges_simplified(int n, std::span<const Edge> edges);

    int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
    std::int64_t edge_count() const noexcept { return edge_count_; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(int u, int v) const;
    bool has_vertex(int v) const noexcept { return v >= 0 && v < vertex_count(); }

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    std::vector<std::vector<int>> adj_;
    std::int64_t edge_count_ = 0;

    static Graph build(int n, std::span<const Edge> edges, bool strict);
};

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Subgraph induced on `vertices` (must be sorted and in range); vertex i of
/// the result is vertices[i].
Graph induced_subgraph(const Graph& g, const VertexSet& vertices);

/// Degeneracy with a witnessing min-degree elimination order (ties broken by
/// smallest vertex identifier). Rejects the empty graph.
struct DegeneracyResult {
    int degeneracy = 0;
    std::vector<int> elimination_order;
};
DegeneracyResult degeneracy(const Graph& g);

/// Exact |E|/|V|; rejects the empty graph.
Density density(const Graph& g);

/// Contracts each part to a single vertex; uncovered vertices become singleton
/// parts appended in increasing order. Parts must be disjoint, in range, and
/// connected. Parallel edges merge, loops vanish.
Graph contract_partition(const Graph& g, const std::vector<VertexSet>& parts);

/// Max shortest-path distance over connected pairs; nullopt when disconnected.
std::optional<int> diameter(const Graph& g);

/// BFS distances from `source` (-1 for unreachable).
std::vector<int> bfs_distances(const Graph& g, int source);

struct ForestCheck {
    bool is_forest = false;
    std::vector<int> cycle; // a witnessing cycle as a vertex sequence when not
};
ForestCheck check_forest(const Graph& g);

} // namespace treedens

#endif
