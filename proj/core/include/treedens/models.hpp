#ifndef TREEDENS_MODELS_HPP
#define TREEDENS_MODELS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "treedens/graph.hpp"
#include "treedens/shortcuts.hpp"

namespace treedens {

/// Backtracking search for a (p,q)-model of K_{s,t}. "None" is only reported
/// when the search space was exhausted; running out of budget yields Unknown.
struct ModelSearchResult {
    enum class Verdict { Found, None, Unknown };
    Verdict verdict = Verdict::Unknown;
    std::optional<BipartiteModel> model;
    std::uint64_t nodes_used = 0;
};
ModelSearchResult find_pq_model(const Graph& g, int s, int t, int p, int q, std::uint64_t budget);

/// An ordered pair (A, B) of edge-disjoint subgraphs covering H with both
/// proper sides non-empty; order = |V(A) cap V(B)|.
struct Separation {
    VertexSet a_vertices;
    VertexSet b_vertices;
    std::vector<Edge> a_edges;
    std::vector<Edge> b_edges;

    int order() const;
    Separation reversed() const { return {b_vertices, a_vertices, b_edges, a_edges}; }
};

/// All (<= s)-separations up to the (A,B) ~ (B,A) symmetry: side A holds the
/// smallest vertex outside the separator. Guard: |V(H)| <= 12.
std::vector<Separation> enumerate_separations(const Graph& h, int s);

/// Independence of ordered separations: edge-disjoint A-sides and disjoint
/// proper A-side vertex sets.
bool independent_separations(const Separation& a, const Separation& b);

/// f_s(H): 1 when no (<= s)-separation exists, else the maximum number of
/// pairwise independent separations, counting both orientations, via exact
/// clique search on the compatibility graph.
struct FlapResult {
    int value = 1;
    std::vector<Separation> witness; // oriented; empty when value == 1
};
FlapResult flap_number(const Graph& h, int s);

} // namespace treedens

#endif
