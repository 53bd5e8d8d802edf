#include "treedens/models.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include <boost/dynamic_bitset.hpp>

namespace treedens {

namespace {

using Mask = std::uint64_t;

Mask to_mask(const VertexSet& set) {
    Mask m = 0;
    for (int v : set) m |= Mask(1) << v;
    return m;
}

struct Candidate {
    VertexSet vertices;
    Mask mask = 0;
    Mask neighbor_mask = 0; // union of member adjacencies
};

bool connected_in(const Graph& g, const VertexSet& set) {
    return connected_components(induced_subgraph(g, set)).size() == 1;
}

// all connected vertex sets of size in [1, cap], lexicographic
std::vector<Candidate> connected_sets(const Graph& g, int cap) {
    std::vector<Candidate> out;
    VertexSet prefix;
    auto rec = [&](auto&& self, int start) -> void {
        for (int v = start; v < g.vertex_count(); ++v) {
            prefix.push_back(v);
            if (connected_in(g, prefix)) {
                Candidate c;
                c.vertices = prefix;
                c.mask = to_mask(prefix);
                for (int u : prefix) c.neighbor_mask |= to_mask(g.neighbors(u));
                out.push_back(std::move(c));
            }
            if (static_cast<int>(prefix.size()) < cap) self(self, v + 1);
            prefix.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

struct ModelSearch {
    const std::vector<Candidate>& left_cands;
    const std::vector<Candidate>& right_cands;
    int s, t;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = true;
    std::vector<int> left, right;
    std::optional<BipartiteModel> found;
    int p, q;

    bool spend() {
        if (nodes >= budget) {
            exhausted = false;
            return false;
        }
        ++nodes;
        return true;
    }

    bool pick_left(std::size_t from, Mask used) {
        if (static_cast<int>(left.size()) == s) return pick_right(0, used);
        for (std::size_t i = from; i < left_cands.size(); ++i) {
            if (!spend()) return false;
            if (left_cands[i].mask & used) continue;
            left.push_back(static_cast<int>(i));
            if (pick_left(i + 1, used | left_cands[i].mask)) return true;
            left.pop_back();
            if (!exhausted) return false;
        }
        return false;
    }

    bool pick_right(std::size_t from, Mask used) {
        if (static_cast<int>(right.size()) == t) {
            BipartiteModel model;
            model.p = p;
            model.q = q;
            for (int i : left) model.left.push_back(left_cands[static_cast<std::size_t>(i)].vertices);
            for (int j : right)
                model.right.push_back(right_cands[static_cast<std::size_t>(j)].vertices);
            found = std::move(model);
            return true;
        }
        for (std::size_t j = from; j < right_cands.size(); ++j) {
            if (!spend()) return false;
            const Candidate& cand = right_cands[j];
            if (cand.mask & used) continue;
            bool joined_all = true;
            for (int i : left)
                if (!(left_cands[static_cast<std::size_t>(i)].mask & cand.neighbor_mask)) {
                    joined_all = false;
                    break;
                }
            if (!joined_all) continue;
            right.push_back(static_cast<int>(j));
            if (pick_right(j + 1, used | cand.mask)) return true;
            right.pop_back();
            if (!exhausted) return false;
        }
        return false;
    }
};

} // namespace

ModelSearchResult find_pq_model(const Graph& g, int s, int t, int p, int q, std::uint64_t budget) {
    if (s < 1 || t < 1 || p < 1 || q < 1) throw DomainError("model parameters must be positive");
    if (g.vertex_count() > 64)
        throw CapacityError("model search supports hosts up to 64 vertices");
    auto left_cands = connected_sets(g, p);
    auto right_cands = p == q ? left_cands : connected_sets(g, q);
    ModelSearch search{left_cands, right_cands, s,  t,  budget, 0,
                       true,       {},          {}, {}, p,      q};
    ModelSearchResult result;
    bool hit = search.pick_left(0, 0);
    result.nodes_used = search.nodes;
    if (hit) {
        result.verdict = ModelSearchResult::Verdict::Found;
        result.model = std::move(search.found);
    } else {
        result.verdict = search.exhausted ? ModelSearchResult::Verdict::None
                                          : ModelSearchResult::Verdict::Unknown;
    }
    return result;
}

int Separation::order() const {
    std::vector<int> inter;
    std::set_intersection(a_vertices.begin(), a_vertices.end(), b_vertices.begin(),
                          b_vertices.end(), std::back_inserter(inter));
    return static_cast<int>(inter.size());
}

std::vector<Separation> enumerate_separations(const Graph& h, int s) {
    const int n = h.vertex_count();
    if (n > 12) throw CapacityError("separation enumeration limited to 12 vertices");
    if (s < 0) throw DomainError("separation order bound must be non-negative");
    std::vector<Separation> out;
    std::vector<Edge> all_edges = h.edges();
    // choose the separator C, then assign H - C components and C-internal edges
    for (Mask c_mask = 0; c_mask < (Mask(1) << n); ++c_mask) {
        int c_size = static_cast<int>(std::popcount(c_mask));
        if (c_size > s) continue;
        VertexSet rest;
        for (int v = 0; v < n; ++v)
            if (!(c_mask >> v & 1)) rest.push_back(v);
        if (rest.size() < 2) continue;
        Graph sub = induced_subgraph(h, rest);
        auto comps_local = connected_components(sub);
        if (comps_local.size() < 2) continue;
        std::vector<VertexSet> comps;
        for (const auto& cl : comps_local) {
            VertexSet comp;
            for (int i : cl) comp.push_back(rest[static_cast<std::size_t>(i)]);
            comps.push_back(std::move(comp));
        }
        std::vector<Edge> c_edges;
        for (auto [u, v] : all_edges)
            if ((c_mask >> u & 1) && (c_mask >> v & 1)) c_edges.push_back({u, v});
        if (comps.size() > 20 || c_edges.size() > 20)
            throw CapacityError("separation enumeration blow-up");
        const std::size_t r = comps.size();
        // comps[0] holds the smallest non-separator vertex and stays on side A
        for (Mask split = 0; split < (Mask(1) << (r - 1)); ++split) {
            if (split == 0) continue; // side B needs a component
            for (Mask eassign = 0; eassign < (Mask(1) << c_edges.size()); ++eassign) {
                Separation sep;
                VertexSet c_vertices;
                for (int v = 0; v < n; ++v)
                    if (c_mask >> v & 1) c_vertices.push_back(v);
                std::vector<char> side_b(static_cast<std::size_t>(n), 0);
                sep.a_vertices = c_vertices;
                sep.b_vertices = c_vertices;
                for (std::size_t ci = 0; ci < r; ++ci) {
                    bool to_b = ci > 0 && (split >> (ci - 1) & 1);
                    for (int v : comps[ci]) {
                        (to_b ? sep.b_vertices : sep.a_vertices).push_back(v);
                        side_b[static_cast<std::size_t>(v)] = to_b ? 1 : 0;
                    }
                }
                std::sort(sep.a_vertices.begin(), sep.a_vertices.end());
                std::sort(sep.b_vertices.begin(), sep.b_vertices.end());
                std::size_t ce = 0;
                for (auto [u, v] : all_edges) {
                    bool u_in_c = c_mask >> u & 1, v_in_c = c_mask >> v & 1;
                    bool to_b;
                    if (u_in_c && v_in_c)
                        to_b = eassign >> ce++ & 1;
                    else
                        to_b = side_b[static_cast<std::size_t>(u_in_c ? v : u)];
                    (to_b ? sep.b_edges : sep.a_edges).push_back({u, v});
                }
                out.push_back(std::move(sep));
            }
        }
    }
    return out;
}

bool independent_separations(const Separation& a, const Separation& b) {
    std::vector<Edge> shared;
    std::set_intersection(a.a_edges.begin(), a.a_edges.end(), b.a_edges.begin(), b.a_edges.end(),
                          std::back_inserter(shared));
    if (!shared.empty()) return false;
    VertexSet pa, pb, common;
    std::set_difference(a.a_vertices.begin(), a.a_vertices.end(), a.b_vertices.begin(),
                        a.b_vertices.end(), std::back_inserter(pa));
    std::set_difference(b.a_vertices.begin(), b.a_vertices.end(), b.b_vertices.begin(),
                        b.b_vertices.end(), std::back_inserter(pb));
    std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(), std::back_inserter(common));
    return common.empty();
}

namespace {

struct CliqueSearch {
    const std::vector<boost::dynamic_bitset<>>& adj;
    std::vector<int> best;
    std::vector<int> current;

    void expand(boost::dynamic_bitset<> candidates) {
        if (candidates.none()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        // greedy colouring upper bound, processed in reverse colour order
        std::vector<int> order, color;
        {
            boost::dynamic_bitset<> uncolored = candidates;
            int c = 0;
            while (uncolored.any()) {
                ++c;
                boost::dynamic_bitset<> avail = uncolored;
                while (avail.any()) {
                    std::size_t v = avail.find_first();
                    order.push_back(static_cast<int>(v));
                    color.push_back(c);
                    uncolored.reset(v);
                    avail.reset(v);
                    avail -= adj[v];
                }
            }
        }
        for (std::size_t idx = order.size(); idx-- > 0;) {
            int v = order[idx];
            if (current.size() + static_cast<std::size_t>(color[idx]) <= best.size()) return;
            current.push_back(v);
            expand(candidates & adj[static_cast<std::size_t>(v)]);
            current.pop_back();
            candidates.reset(static_cast<std::size_t>(v));
        }
    }
};

} // namespace

FlapResult flap_number(const Graph& h, int s) {
    auto canonical = enumerate_separations(h, s);
    FlapResult result;
    if (canonical.empty()) return result; // value 1, empty witness
    std::vector<Separation> oriented;
    oriented.reserve(canonical.size() * 2);
    for (const auto& sep : canonical) {
        oriented.push_back(sep);
        oriented.push_back(sep.reversed());
    }
    const std::size_t n = oriented.size();
    std::vector<boost::dynamic_bitset<>> adj(n, boost::dynamic_bitset<>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (independent_separations(oriented[i], oriented[j])) {
                adj[i].set(j);
                adj[j].set(i);
            }
    CliqueSearch search{adj, {}, {}};
    boost::dynamic_bitset<> all(n);
    all.set();
    search.expand(all);
    result.value = static_cast<int>(search.best.size());
    for (int i : search.best) result.witness.push_back(oriented[static_cast<std::size_t>(i)]);
    return result;
}

} // namespace treedens
