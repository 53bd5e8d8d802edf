#include "treedens/forest.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace treedens {

Forest Forest::from_graph(Graph g) {
    auto fc = check_forest(g);
    if (!fc.is_forest) {
        std::string cycle;
        for (int v : fc.cycle) cycle += std::to_string(v) + " ";
        throw ValidationError("graph is not a forest; cycle: " + cycle);
    }
    return Forest(std::move(g));
}

std::pair<Forest, VertexSet> low_degree_subforest(const Forest& t, int s) {
    VertexSet keep;
    for (int v = 0; v < t.vertex_count(); ++v)
        if (t.graph().degree(v) <= s) keep.push_back(v);
    Graph sub = induced_subgraph(t.graph(), keep);
    return {Forest::from_graph(std::move(sub)), keep};
}

namespace {

// children of v in the rooted component, ascending
std::vector<int> sorted_children(const Graph& g, int v, const std::vector<int>& parent) {
    std::vector<int> ch;
    for (int w : g.neighbors(v))
        if (w != parent[static_cast<std::size_t>(v)]) ch.push_back(w);
    return ch; // adjacency already sorted
}

// Roots every component at its smallest vertex; returns (parent, postorder).
std::pair<std::vector<int>, std::vector<int>> root_forest(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    std::vector<int> post;
    post.reserve(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        if (parent[static_cast<std::size_t>(r)] != -2) continue;
        parent[static_cast<std::size_t>(r)] = -1;
        std::vector<std::pair<int, bool>> stack{{r, false}};
        while (!stack.empty()) {
            auto [v, expanded] = stack.back();
            stack.pop_back();
            if (expanded) {
                post.push_back(v);
                continue;
            }
            stack.emplace_back(v, true);
            for (int w : g.neighbors(v)) {
                if (w == parent[static_cast<std::size_t>(v)]) continue;
                parent[static_cast<std::size_t>(w)] = v;
                stack.emplace_back(w, false);
            }
        }
    }
    return {std::move(parent), std::move(post)};
}

} // namespace

VertexSet max_stable_set_forest(const Forest& f) {
    const Graph& g = f.graph();
    const int n = g.vertex_count();
    auto [parent, post] = root_forest(g);
    std::vector<int> take(static_cast<std::size_t>(n), 0), skip(static_cast<std::size_t>(n), 0);
    for (int v : post) {
        take[static_cast<std::size_t>(v)] = 1;
        for (int w : sorted_children(g, v, parent)) {
            take[static_cast<std::size_t>(v)] += skip[static_cast<std::size_t>(w)];
            skip[static_cast<std::size_t>(v)] +=
                std::max(take[static_cast<std::size_t>(w)], skip[static_cast<std::size_t>(w)]);
        }
    }
    VertexSet out;
    // reconstruct top-down; ties include the current vertex
    std::vector<std::pair<int, bool>> stack; // (vertex, parent_taken)
    for (int v = n - 1; v >= 0; --v)
        if (parent[static_cast<std::size_t>(v)] == -1) stack.emplace_back(v, false);
    while (!stack.empty()) {
        auto [v, parent_taken] = stack.back();
        stack.pop_back();
        bool taken = !parent_taken &&
                     take[static_cast<std::size_t>(v)] >= skip[static_cast<std::size_t>(v)];
        if (taken) out.push_back(v);
        for (int w : sorted_children(g, v, parent)) stack.emplace_back(w, taken);
    }
    std::sort(out.begin(), out.end());
    return out;
}

AlphaResult alpha_s(const Forest& t, int s) {
    auto [sub, low] = low_degree_subforest(t, s);
    VertexSet local = max_stable_set_forest(sub);
    AlphaResult res;
    res.low_degree_set = low;
    for (int i : local) res.witness.push_back(low[static_cast<std::size_t>(i)]);
    res.value = static_cast<int>(res.witness.size());
    return res;
}

MixedCover mixed_cover(const Forest& f) {
    const Graph& g = f.graph();
    const int n = g.vertex_count();
    auto [parent, post] = root_forest(g);
    // greedy leaf-up matching is maximum on forests
    std::vector<char> matched(static_cast<std::size_t>(n), 0);
    MixedCover cover;
    for (int v : post) {
        int p = parent[static_cast<std::size_t>(v)];
        if (p >= 0 && !matched[static_cast<std::size_t>(v)] && !matched[static_cast<std::size_t>(p)]) {
            matched[static_cast<std::size_t>(v)] = matched[static_cast<std::size_t>(p)] = 1;
            cover.edges.emplace_back(std::min(v, p), std::max(v, p));
        }
    }
    for (int v = 0; v < n; ++v)
        if (!matched[static_cast<std::size_t>(v)]) cover.vertices.push_back(v);
    std::sort(cover.edges.begin(), cover.edges.end());
    return cover;
}

namespace {

struct RootedEncoding {
    std::string canon;
    BigInt aut;
};

RootedEncoding encode_rooted(const Graph& g, int v, int parent) {
    std::vector<RootedEncoding> children;
    for (int w : g.neighbors(v))
        if (w != parent) children.push_back(encode_rooted(g, w, v));
    std::sort(children.begin(), children.end(),
              [](const RootedEncoding& a, const RootedEncoding& b) { return a.canon < b.canon; });
    RootedEncoding res;
    res.aut = 1;
    res.canon = "(";
    std::size_t i = 0;
    while (i < children.size()) {
        std::size_t j = i;
        while (j < children.size() && children[j].canon == children[i].canon) ++j;
        BigInt fact = 1;
        for (std::size_t m = 2; m <= j - i; ++m) fact *= m;
        res.aut *= fact;
        for (std::size_t c = i; c < j; ++c) {
            res.aut *= children[c].aut;
            res.canon += children[c].canon;
        }
        i = j;
    }
    res.canon += ")";
    return res;
}

// Center vertices of a tree component (1 or 2), found by leaf peeling.
std::vector<int> tree_centers(const Graph& g, const VertexSet& comp) {
    if (comp.size() == 1) return {comp[0]};
    std::map<int, int> deg;
    for (int v : comp) deg[v] = g.degree(v);
    std::vector<int> layer;
    for (int v : comp)
        if (deg[v] <= 1) layer.push_back(v);
    std::size_t remaining = comp.size();
    std::vector<int> current = layer;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : current) {
            --remaining;
            deg[v] = 0;
            for (int w : g.neighbors(v))
                if (deg[w] > 0 && --deg[w] == 1) next.push_back(w);
        }
        current = std::move(next);
    }
    std::sort(current.begin(), current.end());
    return current;
}

} // namespace

BigInt automorphism_count(const Forest& t) {
    const Graph& g = t.graph();
    std::map<std::string, int> component_classes;
    BigInt total = 1;
    for (const auto& comp : connected_components(g)) {
        auto centers = tree_centers(g, comp);
        std::string canon;
        if (centers.size() == 1) {
            auto enc = encode_rooted(g, centers[0], -1);
            total *= enc.aut;
            canon = "c" + enc.canon;
        } else {
            auto enc_a = encode_rooted(g, centers[0], centers[1]);
            auto enc_b = encode_rooted(g, centers[1], centers[0]);
            total *= enc_a.aut * enc_b.aut;
            if (enc_a.canon == enc_b.canon) total *= 2; // halves swap across the central edge
            if (enc_b.canon < enc_a.canon) std::swap(enc_a, enc_b);
            canon = "e" + enc_a.canon + enc_b.canon;
        }
        ++component_classes[canon];
    }
    for (const auto& [canon, count] : component_classes)
        for (int m = 2; m <= count; ++m) total *= m;
    return total;
}

} // namespace treedens
