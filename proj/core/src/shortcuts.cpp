#include "treedens/shortcuts.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

namespace treedens {

namespace {

void check_path(const Graph& base, const std::vector<int>& path, std::size_t index) {
    if (path.size() < 2)
        throw ValidationError("shortcut " + std::to_string(index) + " is trivial");
    std::set<int> seen;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!base.has_vertex(path[i]))
            throw ValidationError("shortcut " + std::to_string(index) + " leaves the base graph");
        if (!seen.insert(path[i]).second)
            throw ValidationError("shortcut " + std::to_string(index) + " repeats a vertex");
        if (i > 0 && !base.adjacent(path[i - 1], path[i]))
            throw ValidationError("shortcut " + std::to_string(index) +
                                  " uses a non-edge of the base graph");
    }
}

} // namespace

ShortcutProfile validate_shortcut_system(const ShortcutSystem& sys) {
    ShortcutProfile profile;
    const int n = sys.base.vertex_count();
    std::vector<int> internal_load(static_cast<std::size_t>(n), 0);
    std::vector<std::set<int>> m_sets(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < sys.paths.size(); ++i) {
        const auto& path = sys.paths[i];
        check_path(sys.base, path, i);
        profile.max_length = std::max(profile.max_length, static_cast<int>(path.size()) - 1);
        for (std::size_t j = 1; j + 1 < path.size(); ++j) {
            int v = path[j];
            ++internal_load[static_cast<std::size_t>(v)];
            m_sets[static_cast<std::size_t>(v)].insert(path.front());
            m_sets[static_cast<std::size_t>(v)].insert(path.back());
        }
    }
    for (int v = 0; v < n; ++v) {
        profile.max_internal_load = std::max(profile.max_internal_load,
                                             internal_load[static_cast<std::size_t>(v)]);
        profile.max_m_set =
            std::max(profile.max_m_set, static_cast<int>(m_sets[static_cast<std::size_t>(v)].size()));
    }
    return profile;
}

VertexSet m_set(const ShortcutSystem& sys, int v) {
    std::set<int> out;
    for (const auto& path : sys.paths)
        for (std::size_t j = 1; j + 1 < path.size(); ++j)
            if (path[j] == v) {
                out.insert(path.front());
                out.insert(path.back());
            }
    return VertexSet(out.begin(), out.end());
}

Graph expand(const ShortcutSystem& sys) {
    std::vector<Edge> edges = sys.base.edges();
    for (const auto& path : sys.paths) edges.emplace_back(path.front(), path.back());
    return Graph::from_edges_simplified(sys.base.vertex_count(), edges);
}

std::pair<Graph, ShortcutSystem> build_low_degree_square(const Graph& g, int d) {
    ShortcutSystem sys;
    sys.base = g;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) > d) continue;
        const auto& nb = g.neighbors(v);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b)
                sys.paths.push_back({nb[a], v, nb[b]});
    }
    return {expand(sys), std::move(sys)};
}

ModelVerdict verify_model(const Graph& g, const BipartiteModel& model, int s, int t, int p, int q) {
    ModelVerdict verdict;
    auto bail = [&](std::string why) {
        verdict.violation = std::move(why);
        return verdict;
    };
    if (static_cast<int>(model.left.size()) != s)
        return bail("expected " + std::to_string(s) + " left branch sets");
    if (static_cast<int>(model.right.size()) != t)
        return bail("expected " + std::to_string(t) + " right branch sets");
    std::vector<const VertexSet*> all;
    for (const auto& x : model.left) all.push_back(&x);
    for (const auto& y : model.right) all.push_back(&y);
    std::set<int> used;
    for (std::size_t i = 0; i < all.size(); ++i) {
        const VertexSet& set = *all[i];
        if (set.empty()) return bail("branch set " + std::to_string(i) + " is empty");
        int cap = i < model.left.size() ? p : q;
        if (static_cast<int>(set.size()) > cap)
            return bail("branch set " + std::to_string(i) + " exceeds its size cap");
        for (int v : set) {
            if (!g.has_vertex(v)) return bail("branch set vertex out of range");
            if (!used.insert(v).second)
                return bail("branch sets overlap at vertex " + std::to_string(v));
        }
        if (connected_components(induced_subgraph(g, set)).size() != 1)
            return bail("branch set " + std::to_string(i) + " is not connected");
    }
    for (std::size_t i = 0; i < model.left.size(); ++i)
        for (std::size_t j = 0; j < model.right.size(); ++j) {
            bool joined = false;
            for (int u : model.left[i]) {
                for (int v : model.right[j])
                    if (g.adjacent(u, v)) {
                        joined = true;
                        break;
                    }
                if (joined) break;
            }
            if (!joined)
                return bail("no edge between left set " + std::to_string(i) + " and right set " +
                            std::to_string(j));
        }
    verdict.valid = true;
    return verdict;
}

int transfer_required_left(int s, int p, int k, int d) {
    return (d * (k - 1) * (p - 1) + 1) * (s - 1) + 1;
}

int transfer_required_right(int s, int t, int p, int q, int k, int d) {
    return (2 * d * (k - 1) * (s + q - 1) + 1) * (t - 1) + 1 + s * d * (p + (k - 1) * (p - 1));
}

namespace {

// spanning tree edges of a connected branch set, BFS from its smallest vertex
std::vector<Edge> spanning_tree_edges(const Graph& g, const VertexSet& set) {
    std::set<int> inside(set.begin(), set.end());
    std::vector<Edge> edges;
    std::set<int> seen{set.front()};
    std::queue<int> q;
    q.push(set.front());
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (inside.count(w) && !seen.count(w)) {
                seen.insert(w);
                edges.emplace_back(v, w);
                q.push(w);
            }
    }
    return edges;
}

// internal vertices of the shortcut realizing expansion edge {u, v}: none for
// a base edge, else the first system path with those endpoints
std::vector<int> shortcut_internals(const ShortcutSystem& sys, int u, int v) {
    if (sys.base.adjacent(u, v)) return {};
    for (const auto& path : sys.paths)
        if ((path.front() == u && path.back() == v) || (path.front() == v && path.back() == u))
            return std::vector<int>(path.begin() + 1, path.end() - 1);
    throw InternalDefect("expansion edge has no realizing shortcut");
}

// greedy stable set: repeatedly take a minimum-degree vertex (ties to the
// smallest index) and delete its closed neighbourhood
std::vector<int> greedy_stable_set(const std::vector<std::set<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<int> out;
    int remaining = n;
    while (remaining > 0) {
        int pick = -1, best = -1;
        for (int v = 0; v < n; ++v) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            int deg = 0;
            for (int w : adj[static_cast<std::size_t>(v)])
                if (alive[static_cast<std::size_t>(w)]) ++deg;
            if (pick == -1 || deg < best) {
                pick = v;
                best = deg;
            }
        }
        out.push_back(pick);
        alive[static_cast<std::size_t>(pick)] = 0;
        --remaining;
        for (int w : adj[static_cast<std::size_t>(pick)])
            if (alive[static_cast<std::size_t>(w)]) {
                alive[static_cast<std::size_t>(w)] = 0;
                --remaining;
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

BipartiteModel transfer_model(const ShortcutSystem& sys, const BipartiteModel& model, int s, int t,
                              int p, int q, int k, int d) {
    if (s < 1 || t < 1 || p < 1 || q < 1 || k < 1 || d < 0)
        throw DomainError("transfer parameters out of range");
    ShortcutProfile profile = validate_shortcut_system(sys);
    if (profile.max_length > k)
        throw DomainError("system has a shortcut longer than k");
    if (profile.max_m_set > d) throw DomainError("system exceeds the M-set bound d");
    const int s_in = transfer_required_left(s, p, k, d);
    const int t_in = transfer_required_right(s, t, p, q, k, d);
    Graph expansion = expand(sys);
    ModelVerdict pre = verify_model(expansion, model, s_in, t_in, p, q);
    if (!pre.valid)
        throw DomainError("input is not a (p,q)-model of the required complete bipartite graph: " +
                          *pre.violation);

    const int p_out = p + (k - 1) * (p - 1);
    const int q_out = q + (k - 1) * (s + q - 1);

    // augment each left set with the internals of shortcuts realizing its tree edges
    std::vector<VertexSet> left_hat(model.left.size());
    for (std::size_t i = 0; i < model.left.size(); ++i) {
        std::set<int> hat(model.left[i].begin(), model.left[i].end());
        for (auto [u, v] : spanning_tree_edges(expansion, model.left[i]))
            for (int w : shortcut_internals(sys, u, v)) hat.insert(w);
        left_hat[i] = VertexSet(hat.begin(), hat.end());
    }

    // intersection graph over the augmented left sets
    std::vector<std::set<int>> a_adj(left_hat.size());
    for (std::size_t i = 0; i < left_hat.size(); ++i)
        for (std::size_t j = i + 1; j < left_hat.size(); ++j) {
            std::vector<int> inter;
            std::set_intersection(left_hat[i].begin(), left_hat[i].end(), left_hat[j].begin(),
                                  left_hat[j].end(), std::back_inserter(inter));
            if (!inter.empty()) {
                a_adj[i].insert(static_cast<int>(j));
                a_adj[j].insert(static_cast<int>(i));
            }
        }
    std::vector<int> left_stable = greedy_stable_set(a_adj);
    if (static_cast<int>(left_stable.size()) < s)
        throw InternalDefect("left auxiliary graph yielded fewer than s disjoint sets");
    left_stable.resize(static_cast<std::size_t>(s));

    std::set<int> chosen_union; // the union of the chosen augmented left sets
    for (int i : left_stable)
        chosen_union.insert(left_hat[static_cast<std::size_t>(i)].begin(),
                            left_hat[static_cast<std::size_t>(i)].end());
    // forbidden vertices: M-sets of the union, plus the union itself so that
    // surviving right sets cannot touch augmentation vertices
    std::set<int> forbidden = chosen_union;
    for (int x : chosen_union)
        for (int u : m_set(sys, x)) forbidden.insert(u);

    std::vector<int> surviving;
    for (std::size_t j = 0; j < model.right.size(); ++j) {
        bool clean = true;
        for (int v : model.right[j])
            if (forbidden.count(v)) {
                clean = false;
                break;
            }
        if (clean) surviving.push_back(static_cast<int>(j));
    }
    const int right_needed = (2 * d * (k - 1) * (s + q - 1) + 1) * (t - 1) + 1;
    if (static_cast<int>(surviving.size()) < right_needed)
        throw InternalDefect("too few right sets avoid the forbidden vertices");

    // augment surviving right sets: internals for their own tree edges plus one
    // connecting shortcut per chosen left set
    std::vector<VertexSet> right_hat(surviving.size());
    for (std::size_t jj = 0; jj < surviving.size(); ++jj) {
        const VertexSet& y = model.right[static_cast<std::size_t>(surviving[jj])];
        std::set<int> hat(y.begin(), y.end());
        for (int i : left_stable) {
            // smallest expansion edge (x, w) between the original left set and y
            bool connected = false;
            for (int x : model.left[static_cast<std::size_t>(i)]) {
                for (int w : y)
                    if (expansion.adjacent(x, w)) {
                        for (int z : shortcut_internals(sys, x, w)) hat.insert(z);
                        connected = true;
                        break;
                    }
                if (connected) break;
            }
            if (!connected) throw InternalDefect("model lost a required cross edge");
        }
        for (auto [u, v] : spanning_tree_edges(expansion, y))
            for (int w : shortcut_internals(sys, u, v)) hat.insert(w);
        for (int v : hat)
            if (chosen_union.count(v))
                throw InternalDefect("right augmentation touched a chosen left set");
        right_hat[jj] = VertexSet(hat.begin(), hat.end());
    }

    std::vector<std::set<int>> b_adj(right_hat.size());
    for (std::size_t i = 0; i < right_hat.size(); ++i)
        for (std::size_t j = i + 1; j < right_hat.size(); ++j) {
            std::vector<int> inter;
            std::set_intersection(right_hat[i].begin(), right_hat[i].end(), right_hat[j].begin(),
                                  right_hat[j].end(), std::back_inserter(inter));
            if (!inter.empty()) {
                b_adj[i].insert(static_cast<int>(j));
                b_adj[j].insert(static_cast<int>(i));
            }
        }
    std::vector<int> right_stable = greedy_stable_set(b_adj);
    if (static_cast<int>(right_stable.size()) < t)
        throw InternalDefect("right auxiliary graph yielded fewer than t disjoint sets");
    right_stable.resize(static_cast<std::size_t>(t));

    BipartiteModel out;
    out.p = p_out;
    out.q = q_out;
    for (int i : left_stable) out.left.push_back(left_hat[static_cast<std::size_t>(i)]);
    for (int j : right_stable) out.right.push_back(right_hat[static_cast<std::size_t>(j)]);
    ModelVerdict post = verify_model(sys.base, out, s, t, p_out, q_out);
    if (!post.valid)
        throw InternalDefect("transferred model failed validation: " + *post.violation);
    return out;
}

} // namespace treedens
