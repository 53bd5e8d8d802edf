#ifndef TREEDENS_CONSTRUCTION_HPP
#define TREEDENS_CONSTRUCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "treedens/forest.hpp"
#include "treedens/graph.hpp"

namespace treedens {

/// Bags over an index tree (a forest, one tree per decomposed component).
struct TreeDecomposition {
    Graph index_tree;
    std::vector<VertexSet> bags; // bags[i] belongs to index node i

    int width() const {
        int w = -1;
        for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
        return w;
    }
};

struct DecompositionVerdict {
    bool valid = false;
    int width = -1;
    std::optional<std::string> violation;
};

/// Checks the index graph is a forest, every edge of g lies in some bag, and
/// every vertex's bag support induces a non-empty connected subtree.
DecompositionVerdict verify_tree_decomposition(const Graph& g, const TreeDecomposition& d);

/// The blow-up lower-bound instance: each vertex v of a maximum stable set S
/// of the degree-<=s subforest gains m clones with neighborhood N_T(v),
/// together with the width-<=s tree decomposition built over T plus clones.
struct LowerBoundInstance {
    Graph graph;
    TreeDecomposition decomposition;
    VertexSet stable_set;                          // S, in T's (= graph's) ids
    std::vector<std::pair<int, VertexSet>> clones; // (prototype v, C_v)
    std::int64_t m = 0;                            // clones per S-vertex
    int k = 0;                                     // alpha_s(T)
};

/// Builds the instance for target order n >= |V(T)|: m = floor((n-|V(T)|)/k)
/// clones per S-vertex, clone ids appended after T's vertices in prototype
/// order. m = 0 degenerates to the pattern itself.
LowerBoundInstance build_lower_bound_graph(const Forest& t, int s, std::int64_t n);

/// max{s+1-deg_H(v), 0}: the number of star vertices attached to v's copies.
int comp_deg(const Graph& h, int s, int v);

/// Sum of comp_deg over V(H); the size of the star side after contraction.
int gadget_s_prime(const Graph& h, int s);

/// t disjoint copies of H plus, per vertex v, comp_deg(v) star vertices
/// adjacent to every copy of v. Copy (v,i) has id i*|V(H)|+v (i in [0,t));
/// star vertices follow, grouped by v.
struct Gadget {
    Graph graph;
    Graph pattern; // H
    int s = 0;
    int t = 0;

    struct Label {
        bool star = false;
        int h_vertex = 0;
        int index = 0; // copy index i in [0,t) or star index j in [0, comp_deg(v))
    };
    std::vector<Label> labels;

    int copy_id(int v, int i) const { return i * pattern.vertex_count() + v; }
    VertexSet copy_class(int i) const; // {(v,i) : v in V(H)}
    std::string label_string(int vertex) const; // "(v,i)" / "(v,j)*" with 1-based i,j
};
Gadget build_gadget(const Graph& h, int s, int t);

struct GadgetPropertyReport {
    bool contraction_applicable = false;         // needs H connected
    bool contraction_complete_bipartite = true;  // contracting copy classes gives K_{s',t}
    int s_prime = 0;
    bool degrees_ok = false;           // star degree t; copy degree deg+comp_deg
    bool min_degree_applicable = false; // H a non-empty tree and t >= s+1
    bool min_degree_ok = true;          // min degree >= s+1 when applicable
    bool diameter_applicable = false;   // H connected
    bool diameter_ok = true;            // diameter <= diameter(H)+2
    std::optional<std::string> violation;

    bool all_ok() const {
        return contraction_complete_bipartite && degrees_ok && min_degree_ok && diameter_ok;
    }
};
GadgetPropertyReport verify_gadget_properties(const Graph& h, int s, int t);

} // namespace treedens

#endif
