#ifndef TREEDENS_FOREST_HPP
#define TREEDENS_FOREST_HPP

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "treedens/graph.hpp"

namespace treedens {

using BigInt = boost::multiprecision::cpp_int;

/// A graph carrying a checked acyclicity certificate.
class Forest {
public:
    Forest() = default;
    /// Validates acyclicity; throws ValidationError with a cycle witness otherwise.
    static Forest from_graph(Graph g);

    const Graph& graph() const noexcept { return graph_; }
    int vertex_count() const noexcept { return graph_.vertex_count(); }

    bool operator==(const Forest& other) const = default;

private:
    explicit Forest(Graph g) : graph_(std::move(g)) {}
    Graph graph_;
};

/// Subforest induced on S = {v : deg_T(v) <= s} (degrees measured in T),
/// together with S. Vertex i of the subforest is S[i].
std::pair<Forest, VertexSet> low_degree_subforest(const Forest& t, int s);

/// Exact maximum stable set of a forest via the two-state tree DP.
/// Deterministic: on value ties the DP includes the vertex under consideration,
/// components are rooted at their smallest vertex, children visited in order.
VertexSet max_stable_set_forest(const Forest& f);

struct AlphaResult {
    int value = 0;            // alpha_s(T)
    VertexSet witness;        // a maximum stable set of the low-degree subforest, in T's ids
    VertexSet low_degree_set; // S = {v : deg_T(v) <= s}
};

/// alpha_s(T): maximum stable-set size of the subforest induced on vertices of
/// degree at most s.
AlphaResult alpha_s(const Forest& t, int s);

/// A set Y of vertices and edges with |Y| = alpha(F) covering every vertex of
/// F (each vertex is in Y or incident to an edge of Y): maximum-matching edges
/// plus the unmatched vertices.
struct MixedCover {
    VertexSet vertices;
    std::vector<Edge> edges;
    std::size_t size() const noexcept { return vertices.size() + edges.size(); }
};
MixedCover mixed_cover(const Forest& f);

/// |Aut(T)| via canonical rooted encodings: center canonization per component,
/// factorials for repeated child subtrees and repeated components.
BigInt automorphism_count(const Forest& t);

} // namespace treedens

#endif
