#include "treedens/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace treedens {

Graph Graph::build(int n, std::span<const Edge> edges, bool strict) {
    if (n < 0) throw ValidationError("vertex count must be non-negative");
    Graph g;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (std::size_t idx = 0; idx < edges.size(); ++idx) {
        auto [u, v] = edges[idx];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ValidationError("edge " + std::to_string(idx) + " endpoint out of range [0," +
                                  std::to_string(n) + ")");
        if (u == v) {
            if (strict)
                throw ValidationError("self-loop at vertex " + std::to_string(u) + " (edge " +
                                      std::to_string(idx) + ")");
            continue;
        }
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& nb = g.adj_[static_cast<std::size_t>(v)];
        std::sort(nb.begin(), nb.end());
        auto dup = std::adjacent_find(nb.begin(), nb.end());
        if (dup != nb.end()) {
            if (strict)
                throw ValidationError("duplicate edge {" + std::to_string(v) + "," +
                                      std::to_string(*dup) + "}");
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        }
        g.edge_count_ += static_cast<std::int64_t>(nb.size());
    }
    g.edge_count_ /= 2;
    return g;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) { return build(n, edges, true); }

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()), true);
}

Graph Graph::from_edges_simplified(int n, std::span<const Edge> edges) {
    return build(n, edges, false);
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexSet> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        VertexSet comp;
        std::queue<int> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (!g.has_vertex(v)) throw ValidationError("induced subgraph vertex out of range");
        if (pos[static_cast<std::size_t>(v)] != -1)
            throw ValidationError("induced subgraph vertex repeated");
        pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (int w : g.neighbors(vertices[i])) {
            int j = pos[static_cast<std::size_t>(w)];
            if (j != -1 && static_cast<int>(i) < j) edges.emplace_back(static_cast<int>(i), j);
        }
    return Graph::from_edges(static_cast<int>(vertices.size()), edges);
}

DegeneracyResult degeneracy(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw DomainError("degeneracy undefined for the empty graph");
    std::vector<int> deg(static_cast<std::size_t>(n));
    // buckets keyed by current degree; std::set gives smallest-id tie-breaking
    std::vector<std::set<int>> buckets(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        buckets[static_cast<std::size_t>(g.degree(v))].insert(v);
    }
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    DegeneracyResult result;
    result.elimination_order.reserve(static_cast<std::size_t>(n));
    int lowest = 0;
    for (int step = 0; step < n; ++step) {
        if (lowest > 0) --lowest; // degree of a neighbor drops by at most 1 per removal
        while (buckets[static_cast<std::size_t>(lowest)].empty()) ++lowest;
        int v = *buckets[static_cast<std::size_t>(lowest)].begin();
        buckets[static_cast<std::size_t>(lowest)].erase(buckets[static_cast<std::size_t>(lowest)].begin());
        removed[static_cast<std::size_t>(v)] = 1;
        result.degeneracy = std::max(result.degeneracy, deg[static_cast<std::size_t>(v)]);
        result.elimination_order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (removed[static_cast<std::size_t>(w)]) continue;
            auto& d = deg[static_cast<std::size_t>(w)];
            buckets[static_cast<std::size_t>(d)].erase(w);
            --d;
            buckets[static_cast<std::size_t>(d)].insert(w);
        }
    }
    return result;
}

Density density(const Graph& g) {
    if (g.vertex_count() == 0) throw DomainError("density undefined for the empty graph");
    return Density(g.edge_count(), g.vertex_count());
}

Graph contract_partition(const Graph& g, const std::vector<VertexSet>& parts) {
    const int n = g.vertex_count();
    std::vector<int> part_of(static_cast<std::size_t>(n), -1);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty()) throw ValidationError("empty part");
        for (int v : parts[p]) {
            if (v < 0 || v >= n) throw ValidationError("part vertex out of range");
            if (part_of[static_cast<std::size_t>(v)] != -1)
                throw ValidationError("parts overlap at vertex " + std::to_string(v));
            part_of[static_cast<std::size_t>(v)] = static_cast<int>(p);
        }
        // each part must induce a connected subgraph
        Graph sub = induced_subgraph(g, parts[p]);
        if (!parts[p].empty() && connected_components(sub).size() != 1)
            throw ValidationError("part " + std::to_string(p) + " is not connected");
    }
    int next = static_cast<int>(parts.size());
    for (int v = 0; v < n; ++v)
        if (part_of[static_cast<std::size_t>(v)] == -1) part_of[static_cast<std::size_t>(v)] = next++;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (u >= v) continue;
            int pu = part_of[static_cast<std::size_t>(u)];
            int pv = part_of[static_cast<std::size_t>(v)];
            if (pu != pv) edges.emplace_back(std::min(pu, pv), std::max(pu, pv));
        }
    return Graph::from_edges_simplified(next, edges);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (dist[static_cast<std::size_t>(w)] == -1) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::optional<int> diameter(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return 0;
    int best = 0;
    for (int s = 0; s < n; ++s) {
        auto dist = bfs_distances(g, s);
        for (int d : dist) {
            if (d == -1) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

ForestCheck check_forest(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    for (int s = 0; s < n; ++s) {
        if (parent[static_cast<std::size_t>(s)] != -2) continue;
        // iterative DFS; a visited non-parent neighbor closes a cycle
        std::vector<int> stack{s};
        parent[static_cast<std::size_t>(s)] = -1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (w == parent[static_cast<std::size_t>(v)]) continue;
                if (parent[static_cast<std::size_t>(w)] != -2) {
                    // walk both endpoints to their common ancestor via parent links
                    std::vector<int> path_v{v}, path_w{w};
                    auto depth = [&](int x) {
                        int d = 0;
                        for (int y = x; y != -1; y = parent[static_cast<std::size_t>(y)]) ++d;
                        return d;
                    };
                    int dv = depth(v), dw = depth(w);
                    int a = v, b = w;
                    while (dv > dw) { a = parent[static_cast<std::size_t>(a)]; path_v.push_back(a); --dv; }
                    while (dw > dv) { b = parent[static_cast<std::size_t>(b)]; path_w.push_back(b); --dw; }
                    while (a != b) {
                        a = parent[static_cast<std::size_t>(a)];
                        b = parent[static_cast<std::size_t>(b)];
                        path_v.push_back(a);
                        path_w.push_back(b);
                    }
                    ForestCheck fc;
                    fc.is_forest = false;
                    fc.cycle.assign(path_v.begin(), path_v.end());
                    for (auto it = std::next(path_w.rbegin()); it != path_w.rend(); ++it)
                        fc.cycle.push_back(*it);
                    return fc;
                }
                parent[static_cast<std::size_t>(w)] = v;
                stack.push_back(w);
            }
        }
    }
    return ForestCheck{true, {}};
}

} // namespace treedens
