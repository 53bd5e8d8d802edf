#include "treedens/construction.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace treedens {

DecompositionVerdict verify_tree_decomposition(const Graph& g, const TreeDecomposition& d) {
    DecompositionVerdict verdict;
    verdict.width = d.width();
    if (d.bags.size() != static_cast<std::size_t>(d.index_tree.vertex_count())) {
        verdict.violation = "bag count differs from index node count";
        return verdict;
    }
    auto fc = check_forest(d.index_tree);
    if (!fc.is_forest) {
        verdict.violation = "index graph contains a cycle";
        return verdict;
    }
    const int n = g.vertex_count();
    for (std::size_t i = 0; i < d.bags.size(); ++i)
        for (int v : d.bags[i])
            if (v < 0 || v >= n) {
                verdict.violation = "bag " + std::to_string(i) + " names vertex " +
                                    std::to_string(v) + " outside the graph";
                return verdict;
            }
    // (T1): every edge inside some bag
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& bag : d.bags)
            if (std::binary_search(bag.begin(), bag.end(), u) &&
                std::binary_search(bag.begin(), bag.end(), v)) {
                covered = true;
                break;
            }
        if (!covered) {
            verdict.violation =
                "edge {" + std::to_string(u) + "," + std::to_string(v) + "} lies in no bag";
            return verdict;
        }
    }
    // (T2): per-vertex bag support non-empty and connected in the index forest
    std::vector<std::vector<int>> support(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < d.bags.size(); ++i)
        for (int v : d.bags[i]) support[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    for (int v = 0; v < n; ++v) {
        const auto& nodes = support[static_cast<std::size_t>(v)];
        if (nodes.empty()) {
            verdict.violation = "vertex " + std::to_string(v) + " appears in no bag";
            return verdict;
        }
        std::vector<char> in_support(d.bags.size(), 0);
        for (int x : nodes) in_support[static_cast<std::size_t>(x)] = 1;
        std::queue<int> q;
        q.push(nodes[0]);
        std::vector<char> seen(d.bags.size(), 0);
        seen[static_cast<std::size_t>(nodes[0])] = 1;
        std::size_t reached = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : d.index_tree.neighbors(x))
                if (in_support[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    ++reached;
                    q.push(y);
                }
        }
        if (reached != nodes.size()) {
            verdict.violation =
                "vertex " + std::to_string(v) + " has a disconnected bag support";
            return verdict;
        }
    }
    verdict.valid = true;
    return verdict;
}

LowerBoundInstance build_lower_bound_graph(const Forest& t, int s, std::int64_t n) {
    const Graph& tg = t.graph();
    const int tn = tg.vertex_count();
    if (s < 1) throw DomainError("blow-up construction requires s >= 1");
    if (n < tn) throw DomainError("target order smaller than the pattern");
    AlphaResult alpha = alpha_s(t, s);
    if (alpha.value == 0) throw DomainError("alpha_s(T) = 0: no vertex of degree <= s");

    LowerBoundInstance inst;
    inst.k = alpha.value;
    inst.m = (n - tn) / alpha.value;
    inst.stable_set = alpha.witness;

    std::vector<Edge> graph_edges = tg.edges();
    std::vector<Edge> index_edges = tg.edges(); // index forest starts as T itself
    int next = tn;
    for (int v : alpha.witness) {
        VertexSet clone_set;
        for (std::int64_t c = 0; c < inst.m; ++c) {
            int x = next++;
            clone_set.push_back(x);
            for (int w : tg.neighbors(v)) graph_edges.emplace_back(w, x);
            index_edges.emplace_back(v, x); // clones hang off their prototype
        }
        inst.clones.emplace_back(v, std::move(clone_set));
    }
    inst.graph = Graph::from_edges(next, graph_edges);
    inst.decomposition.index_tree = Graph::from_edges(next, index_edges);
    inst.decomposition.bags.assign(static_cast<std::size_t>(next), {});

    std::vector<char> in_s(static_cast<std::size_t>(next), 0);
    for (int v : alpha.witness) in_s[static_cast<std::size_t>(v)] = 1;

    // parent links within T, rooted per component
    std::vector<int> parent(static_cast<std::size_t>(tn), -2);
    auto comps = connected_components(tg);
    for (const auto& comp : comps) {
        int root = -1;
        for (int v : comp)
            if (!in_s[static_cast<std::size_t>(v)]) {
                root = v;
                break;
            }
        auto bag_at = [&](int node) -> VertexSet& {
            return inst.decomposition.bags[static_cast<std::size_t>(node)];
        };
        if (root == -1) {
            // the whole component sits inside S, hence it is a single vertex;
            // clones are twins and {v}, {v,x} bags suffice
            int v = comp[0];
            bag_at(v) = {v};
            for (const auto& [proto, clone_set] : inst.clones)
                if (proto == v)
                    for (int x : clone_set) bag_at(x) = {v, x};
            continue;
        }
        // BFS orientation from the root
        parent[static_cast<std::size_t>(root)] = -1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : tg.neighbors(v))
                if (parent[static_cast<std::size_t>(w)] == -2) {
                    parent[static_cast<std::size_t>(w)] = v;
                    q.push(w);
                }
        }
        bag_at(root) = {root};
        for (int v : comp) {
            if (v == root) continue;
            if (!in_s[static_cast<std::size_t>(v)]) {
                VertexSet bag{v, parent[static_cast<std::size_t>(v)]};
                std::sort(bag.begin(), bag.end());
                bag_at(v) = std::move(bag);
            } else {
                VertexSet base = tg.neighbors(v);
                VertexSet bag = base;
                bag.push_back(v);
                std::sort(bag.begin(), bag.end());
                bag_at(v) = std::move(bag);
                for (const auto& [proto, clone_set] : inst.clones) {
                    if (proto != v) continue;
                    for (int x : clone_set) {
                        VertexSet cb = base;
                        cb.push_back(x);
                        std::sort(cb.begin(), cb.end());
                        bag_at(x) = std::move(cb);
                    }
                }
            }
        }
    }
    return inst;
}

int comp_deg(const Graph& h, int s, int v) {
    if (!h.has_vertex(v)) throw DomainError("vertex out of range");
    return std::max(s + 1 - h.degree(v), 0);
}

int gadget_s_prime(const Graph& h, int s) {
    int sum = 0;
    for (int v = 0; v < h.vertex_count(); ++v) sum += comp_deg(h, s, v);
    return sum;
}

VertexSet Gadget::copy_class(int i) const {
    VertexSet out;
    const int hn = pattern.vertex_count();
    for (int v = 0; v < hn; ++v) out.push_back(copy_id(v, i));
    return out;
}

std::string Gadget::label_string(int vertex) const {
    const Label& l = labels[static_cast<std::size_t>(vertex)];
    std::string s = "(" + std::to_string(l.h_vertex) + "," + std::to_string(l.index + 1) + ")";
    if (l.star) s += "*";
    return s;
}

Gadget build_gadget(const Graph& h, int s, int t) {
    if (h.vertex_count() < 1) throw DomainError("gadget pattern must have a vertex");
    if (s < 1 || t < 1) throw DomainError("gadget requires s >= 1 and t >= 1");
    Gadget gadget;
    gadget.pattern = h;
    gadget.s = s;
    gadget.t = t;
    const int hn = h.vertex_count();
    std::vector<Edge> edges;
    for (int i = 0; i < t; ++i)
        for (auto [u, v] : h.edges())
            edges.emplace_back(gadget.copy_id(u, i), gadget.copy_id(v, i));
    int next = t * hn;
    for (int i = 0; i < t; ++i)
        for (int v = 0; v < hn; ++v)
            gadget.labels.push_back({false, v, i});
    // star vertices, grouped by their pattern vertex
    for (int v = 0; v < hn; ++v) {
        int boost = comp_deg(h, s, v);
        for (int j = 0; j < boost; ++j) {
            int star = next++;
            gadget.labels.push_back({true, v, j});
            for (int i = 0; i < t; ++i) edges.emplace_back(gadget.copy_id(v, i), star);
        }
    }
    gadget.graph = Graph::from_edges(next, edges);
    return gadget;
}

GadgetPropertyReport verify_gadget_properties(const Graph& h, int s, int t) {
    GadgetPropertyReport report;
    Gadget gadget = build_gadget(h, s, t);
    report.s_prime = gadget_s_prime(h, s);
    const int hn = h.vertex_count();

    // (A) contracting the copy classes leaves K_{s',t}: class-vertices 0..t-1,
    // star vertices t..t+s'-1, all cross edges present and nothing else
    report.contraction_applicable = connected_components(h).size() == 1;
    if (report.contraction_applicable) {
        std::vector<VertexSet> parts;
        for (int i = 0; i < t; ++i) parts.push_back(gadget.copy_class(i));
        Graph contracted = contract_partition(gadget.graph, parts);
        bool ok = contracted.vertex_count() == t + report.s_prime;
        for (int i = 0; ok && i < t; ++i)
            for (int j = 0; ok && j < contracted.vertex_count(); ++j) {
                bool expect = j >= t;
                if (contracted.adjacent(i, j) != (expect && j != i)) ok = false;
            }
        for (int a = t; ok && a < contracted.vertex_count(); ++a)
            for (int b = a + 1; b < contracted.vertex_count(); ++b)
                if (contracted.adjacent(a, b)) {
                    ok = false;
                    break;
                }
        report.contraction_complete_bipartite = ok;
        if (!ok) report.violation = "contraction is not the expected complete bipartite graph";
    }

    // (B) degree bookkeeping
    {
        bool ok = true;
        for (int v = 0; ok && v < gadget.graph.vertex_count(); ++v) {
            const auto& l = gadget.labels[static_cast<std::size_t>(v)];
            int expect = l.star ? t : h.degree(l.h_vertex) + comp_deg(h, s, l.h_vertex);
            if (gadget.graph.degree(v) != expect) ok = false;
        }
        report.degrees_ok = ok;
        if (!ok && !report.violation) report.violation = "gadget degree mismatch";
        bool tree = hn >= 1 && check_forest(h).is_forest && connected_components(h).size() == 1;
        report.min_degree_applicable = tree && t >= s + 1;
        if (report.min_degree_applicable) {
            int min_deg = gadget.graph.vertex_count();
            for (int v = 0; v < gadget.graph.vertex_count(); ++v)
                min_deg = std::min(min_deg, gadget.graph.degree(v));
            report.min_degree_ok = min_deg >= s + 1;
            if (!report.min_degree_ok && !report.violation)
                report.violation = "gadget minimum degree below s+1";
        }
    }

    // (C) diameter grows by at most 2
    if (connected_components(h).size() == 1) {
        report.diameter_applicable = true;
        auto dh = diameter(h);
        auto dg = diameter(gadget.graph);
        report.diameter_ok = dh && dg && *dg <= *dh + 2;
        if (!report.diameter_ok && !report.violation)
            report.violation = "gadget diameter exceeds diameter(H)+2";
    }
    return report;
}

} // namespace treedens
