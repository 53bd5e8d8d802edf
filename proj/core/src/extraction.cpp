#include "treedens/extraction.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <set>

namespace treedens {

namespace {
constexpr std::size_t kCoherenceGuard = 200;
}

BigInt coherence_threshold(int h, const BigInt& t) {
    BigInt f = factorial(h);
    BigInt pow = 1;
    for (int i = 0; i < h; ++i) pow *= t;
    return f * f * pow;
}

BigInt sunflower_threshold(int h, int t) {
    BigInt pow = 1;
    for (int i = 0; i < h; ++i) pow *= (t - 1);
    return factorial(h) * pow + 1;
}

std::vector<std::pair<int, int>> conflict_pairs(const std::vector<Embedding>& images) {
    std::vector<std::pair<int, int>> out;
    if (images.empty()) return out;
    const int h = images[0].pattern_size();
    for (const auto& e : images)
        if (e.pattern_size() != h) throw DomainError("images map different patterns");
    const int n = static_cast<int>(images.size());
    for (int i = 0; i < n; ++i) {
        std::map<int, int> position; // host vertex -> pattern vertex under image i
        for (int x = 0; x < h; ++x) position[images[static_cast<std::size_t>(i)].assignment[static_cast<std::size_t>(x)]] = x;
        for (int j = i + 1; j < n; ++j) {
            bool conflict = false;
            for (int y = 0; y < h && !conflict; ++y) {
                auto it = position.find(images[static_cast<std::size_t>(j)].assignment[static_cast<std::size_t>(y)]);
                if (it != position.end() && it->second != y) conflict = true;
            }
            if (conflict) out.emplace_back(i, j);
        }
    }
    return out;
}

namespace {

using ConflictRow = std::bitset<kCoherenceGuard + 56>;

struct MisSearch {
    const std::vector<ConflictRow>& adj;
    int n;
    std::vector<int> best;
    std::vector<int> current;

    void run(ConflictRow candidates) {
        if (static_cast<int>(current.size()) + static_cast<int>(candidates.count()) <=
            static_cast<int>(best.size()))
            return;
        if (candidates.none()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        // pivot on the candidate with most conflicts inside the candidate set
        int pivot = -1;
        std::size_t pivot_deg = 0;
        for (int v = 0; v < n; ++v) {
            if (!candidates.test(static_cast<std::size_t>(v))) continue;
            std::size_t deg = (adj[static_cast<std::size_t>(v)] & candidates).count();
            if (pivot == -1 || deg > pivot_deg) {
                pivot = v;
                pivot_deg = deg;
            }
        }
        // include the pivot
        ConflictRow included = candidates;
        included.reset(static_cast<std::size_t>(pivot));
        included &= ~adj[static_cast<std::size_t>(pivot)];
        current.push_back(pivot);
        run(included);
        current.pop_back();
        // exclude the pivot
        ConflictRow excluded = candidates;
        excluded.reset(static_cast<std::size_t>(pivot));
        run(excluded);
    }
};

std::vector<int> maximum_coherent_subfamily(const std::vector<Embedding>& images) {
    if (images.size() > kCoherenceGuard)
        throw CapacityError("coherent-subfamily search limited to " +
                            std::to_string(kCoherenceGuard) + " images");
    const int n = static_cast<int>(images.size());
    std::vector<ConflictRow> adj(static_cast<std::size_t>(n));
    for (auto [i, j] : conflict_pairs(images)) {
        adj[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j));
        adj[static_cast<std::size_t>(j)].set(static_cast<std::size_t>(i));
    }
    MisSearch search{adj, n, {}, {}};
    ConflictRow all;
    for (int v = 0; v < n; ++v) all.set(static_cast<std::size_t>(v));
    search.run(all);
    std::sort(search.best.begin(), search.best.end());
    return search.best;
}

} // namespace

std::optional<std::vector<int>> coherent_subfamily(const std::vector<Embedding>& images, int t) {
    auto best = maximum_coherent_subfamily(images);
    if (static_cast<int>(best.size()) < t) return std::nullopt;
    return best;
}

SetFamily SetFamily::from_sets(std::vector<std::vector<int>> sets) {
    SetFamily family;
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw ValidationError("set contains a repeated element");
    }
    if (!sets.empty()) {
        family.element_size = static_cast<int>(sets[0].size());
        for (const auto& s : sets)
            if (static_cast<int>(s.size()) != family.element_size)
                throw ValidationError("sets have mixed sizes");
        std::set<std::vector<int>> distinct(sets.begin(), sets.end());
        if (distinct.size() != sets.size()) throw ValidationError("sets are not distinct");
    }
    family.sets = std::move(sets);
    return family;
}

bool validate_sunflower(const SetFamily& family, const Sunflower& sf) {
    const auto& members = sf.member_indices;
    if (members.size() < 2) return false;
    for (int idx : members)
        if (idx < 0 || idx >= static_cast<int>(family.sets.size())) return false;
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            const auto& x = family.sets[static_cast<std::size_t>(members[a])];
            const auto& y = family.sets[static_cast<std::size_t>(members[b])];
            std::vector<int> inter;
            std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                                  std::back_inserter(inter));
            if (inter != sf.kernel) return false;
        }
    return true;
}

namespace {

std::optional<Sunflower> sunflower_recurse(const std::vector<std::vector<int>>& sets,
                                           const std::vector<int>& indices, int t,
                                           std::vector<int>& kernel) {
    // greedy maximal pairwise-disjoint subfamily, in order
    std::vector<int> taken;
    std::set<int> blocked;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool clean = true;
        for (int e : sets[i])
            if (blocked.count(e)) {
                clean = false;
                break;
            }
        if (!clean) continue;
        taken.push_back(static_cast<int>(i));
        for (int e : sets[i]) blocked.insert(e);
    }
    if (static_cast<int>(taken.size()) >= t) {
        Sunflower sf;
        sf.kernel = kernel;
        for (int i = 0; i < t; ++i)
            sf.member_indices.push_back(indices[static_cast<std::size_t>(taken[static_cast<std::size_t>(i)])]);
        return sf;
    }
    // popular element step
    std::map<int, int> freq;
    for (const auto& s : sets)
        for (int e : s) ++freq[e];
    int popular = -1, popular_count = 0;
    for (const auto& [e, c] : freq)
        if (c > popular_count) {
            popular = e;
            popular_count = c;
        }
    if (popular_count < 2) return std::nullopt; // all sets disjoint yet too few
    std::vector<std::vector<int>> link;
    std::vector<int> link_indices;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (!std::binary_search(sets[i].begin(), sets[i].end(), popular)) continue;
        std::vector<int> reduced;
        for (int e : sets[i])
            if (e != popular) reduced.push_back(e);
        link.push_back(std::move(reduced));
        link_indices.push_back(indices[i]);
    }
    kernel.push_back(popular);
    auto res = sunflower_recurse(link, link_indices, t, kernel);
    kernel.pop_back();
    return res;
}

} // namespace

std::optional<Sunflower> find_sunflower(const SetFamily& family, int t) {
    if (t < 2) throw DomainError("sunflower extraction requires t >= 2");
    std::vector<int> indices(family.sets.size());
    for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = static_cast<int>(i);
    std::vector<int> kernel;
    auto res = sunflower_recurse(family.sets, indices, t, kernel);
    if (res) {
        std::sort(res->kernel.begin(), res->kernel.end());
        if (!validate_sunflower(family, *res))
            throw InternalDefect("sunflower search produced an invalid sunflower");
    }
    return res;
}

std::string to_string(ExtractStage stage) {
    switch (stage) {
        case ExtractStage::Bucketing: return "bucketing";
        case ExtractStage::Coherence: return "coherence";
        case ExtractStage::Sunflower: return "sunflower";
        case ExtractStage::KernelComponent: return "kernel component";
        case ExtractStage::Assembly: return "witness assembly";
    }
    return "?";
}

namespace {

BigRational rational_pow(const BigRational& base, int exp) {
    BigRational out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

ExtractionOutcome fail(ExtractionOutcome base, ExtractStage stage, std::int64_t required,
                       std::int64_t available, std::string message) {
    base.failure = StageFailure{stage, required, available, std::move(message)};
    return base;
}

} // namespace

ExtractionOutcome extract_witness(const Forest& t_pattern, int s, int t, const Graph& host,
                                  const std::vector<Embedding>& images) {
    if (s < 1) throw DomainError("witness extraction requires s >= 1");
    if (t < 2) throw DomainError("witness extraction requires t >= 2");
    const int h = t_pattern.vertex_count();
    if (h == 0) throw DomainError("empty pattern");
    for (const auto& e : images)
        if (!is_valid_embedding(t_pattern.graph(), host, e))
            throw DomainError("supplied image is not a valid embedding");

    ExtractionOutcome outcome;
    {
        BigInt c7 = sunflower_threshold(h, t);
        outcome.thresholds.coherence_need = coherence_threshold(h, c7);
        AlphaResult alpha = alpha_s(t_pattern, s);
        BigRational rho_plus_1 = 1;
        if (host.vertex_count() > 0) {
            Density rho = density(host);
            rho_plus_1 = BigRational(rho.numerator() + rho.denominator(), rho.denominator());
        }
        BigInt n_pow_k = 1;
        for (int i = 0; i < alpha.value; ++i) n_pow_k *= host.vertex_count();
        outcome.thresholds.images_needed_h =
            BigRational(outcome.thresholds.coherence_need) * rational_pow(rho_plus_1, h) * BigRational(n_pow_k);
        outcome.thresholds.images_needed_k =
            BigRational(outcome.thresholds.coherence_need) * rational_pow(rho_plus_1, alpha.value) * BigRational(n_pow_k);
        outcome.thresholds.images_supplied = static_cast<std::int64_t>(images.size());
    }

    if (static_cast<int>(images.size()) < t)
        return fail(std::move(outcome), ExtractStage::Bucketing, t,
                    static_cast<std::int64_t>(images.size()), "fewer images than t");

    // cover footprint: Y = matching edges + unmatched vertices of the
    // low-degree subforest, pulled back to pattern ids
    AlphaResult alpha = alpha_s(t_pattern, s);
    auto [sub, low] = low_degree_subforest(t_pattern, s);
    MixedCover cover = mixed_cover(sub);
    VertexSet cover_vertices;
    for (int v : cover.vertices) cover_vertices.push_back(low[static_cast<std::size_t>(v)]);
    std::vector<Edge> cover_edges;
    for (auto [u, v] : cover.edges)
        cover_edges.emplace_back(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);

    using BucketKey = std::pair<std::vector<int>, std::vector<Edge>>;
    std::map<BucketKey, std::vector<int>> buckets;
    for (std::size_t idx = 0; idx < images.size(); ++idx) {
        const auto& a = images[idx].assignment;
        BucketKey key;
        for (int x : cover_vertices) key.first.push_back(a[static_cast<std::size_t>(x)]);
        std::sort(key.first.begin(), key.first.end());
        for (auto [x, y] : cover_edges) {
            int u = a[static_cast<std::size_t>(x)], v = a[static_cast<std::size_t>(y)];
            key.second.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(key.second.begin(), key.second.end());
        buckets[std::move(key)].push_back(static_cast<int>(idx));
    }
    const std::vector<int>* bucket = nullptr;
    for (const auto& [key, members] : buckets)
        if (!bucket || members.size() > bucket->size()) bucket = &members;

    std::vector<Embedding> bucket_images;
    for (int idx : *bucket) bucket_images.push_back(images[static_cast<std::size_t>(idx)]);
    std::vector<int> coherent_local = maximum_coherent_subfamily(bucket_images);
    if (static_cast<int>(coherent_local.size()) < t)
        return fail(std::move(outcome), ExtractStage::Coherence, t,
                    static_cast<std::int64_t>(coherent_local.size()),
                    "largest bucket has no coherent subfamily of size t");
    std::vector<int> coherent; // original image indices
    for (int i : coherent_local) coherent.push_back((*bucket)[static_cast<std::size_t>(i)]);

    // coherent images must occupy pairwise distinct vertex sets
    std::vector<std::vector<int>> vertex_sets;
    for (int idx : coherent) {
        std::vector<int> vs = images[static_cast<std::size_t>(idx)].assignment;
        std::sort(vs.begin(), vs.end());
        vertex_sets.push_back(std::move(vs));
    }
    {
        std::set<std::vector<int>> distinct(vertex_sets.begin(), vertex_sets.end());
        if (distinct.size() != vertex_sets.size())
            throw InternalDefect("coherent images share a vertex set");
    }

    SetFamily family = SetFamily::from_sets(vertex_sets);
    auto sf = find_sunflower(family, t);
    if (!sf)
        return fail(std::move(outcome), ExtractStage::Sunflower, t,
                    static_cast<std::int64_t>(family.sets.size()),
                    "no t-sunflower among the coherent image vertex sets");

    std::vector<int> members; // original image indices of the sunflower
    for (int i : sf->member_indices) members.push_back(coherent[static_cast<std::size_t>(i)]);

    // kernel preimage; independent of the representative by coherence
    std::set<int> kernel_hosts(sf->kernel.begin(), sf->kernel.end());
    VertexSet kernel_preimage;
    const auto& rep = images[static_cast<std::size_t>(members[0])].assignment;
    for (int x = 0; x < h; ++x)
        if (kernel_hosts.count(rep[static_cast<std::size_t>(x)])) kernel_preimage.push_back(x);
    for (std::size_t mi = 1; mi < members.size(); ++mi) {
        const auto& other = images[static_cast<std::size_t>(members[mi])].assignment;
        VertexSet check;
        for (int x = 0; x < h; ++x)
            if (kernel_hosts.count(other[static_cast<std::size_t>(x)])) check.push_back(x);
        if (check != kernel_preimage)
            throw InternalDefect("kernel preimage depends on the representative image");
    }
    {
        std::set<int> kp(kernel_preimage.begin(), kernel_preimage.end());
        for (int v : alpha.low_degree_set)
            if (!kp.count(v)) throw InternalDefect("low-degree set escapes the kernel preimage");
    }

    if (static_cast<int>(kernel_preimage.size()) == h)
        return fail(std::move(outcome), ExtractStage::KernelComponent, 1, 0,
                    "kernel preimage swallows the whole pattern");

    // U := largest component of T - K, ties to the smallest vertex
    VertexSet rest;
    {
        std::set<int> kp(kernel_preimage.begin(), kernel_preimage.end());
        for (int v = 0; v < h; ++v)
            if (!kp.count(v)) rest.push_back(v);
    }
    Graph t_minus_k = induced_subgraph(t_pattern.graph(), rest);
    auto comps = connected_components(t_minus_k);
    std::size_t pick = 0;
    for (std::size_t i = 1; i < comps.size(); ++i)
        if (comps[i].size() > comps[pick].size()) pick = i;
    VertexSet subtree_vertices;
    for (int local : comps[pick]) subtree_vertices.push_back(rest[static_cast<std::size_t>(local)]);
    Graph u_graph = induced_subgraph(t_pattern.graph(), subtree_vertices);

    // star anchors: for each U-vertex the first comp_deg neighbours inside K
    std::set<int> kp(kernel_preimage.begin(), kernel_preimage.end());
    std::vector<std::vector<int>> star_anchor(subtree_vertices.size());
    for (std::size_t i = 0; i < subtree_vertices.size(); ++i) {
        int v = subtree_vertices[i];
        int need = comp_deg(u_graph, s, static_cast<int>(i));
        for (int w : t_pattern.graph().neighbors(v)) {
            if (static_cast<int>(star_anchor[i].size()) == need) break;
            if (kp.count(w)) star_anchor[i].push_back(w);
        }
        if (static_cast<int>(star_anchor[i].size()) < need)
            return fail(std::move(outcome), ExtractStage::Assembly, need,
                        static_cast<std::int64_t>(star_anchor[i].size()),
                        "pattern vertex lacks enough kernel neighbours");
    }

    WitnessResult witness;
    witness.subtree = Forest::from_graph(u_graph);
    witness.subtree_vertices = subtree_vertices;
    witness.kernel_preimage = kernel_preimage;
    witness.selected_images = members;
    for (std::size_t i = 0; i < subtree_vertices.size(); ++i) {
        int v = subtree_vertices[i];
        for (int copy = 0; copy < t; ++copy) {
            const auto& a = images[static_cast<std::size_t>(members[static_cast<std::size_t>(copy)])].assignment;
            witness.embedding.push_back({false, v, copy, a[static_cast<std::size_t>(v)]});
        }
        for (std::size_t j = 0; j < star_anchor[i].size(); ++j)
            witness.embedding.push_back(
                {true, v, static_cast<int>(j),
                 rep[static_cast<std::size_t>(star_anchor[i][j])]});
    }

    // validate against a freshly built gadget: injective and edge-covering
    {
        Gadget gadget = build_gadget(u_graph, s, t);
        std::vector<int> to_host(static_cast<std::size_t>(gadget.graph.vertex_count()), -1);
        std::vector<int> star_base(subtree_vertices.size(), 0);
        {
            int offset = t * static_cast<int>(subtree_vertices.size());
            for (std::size_t i = 0; i < subtree_vertices.size(); ++i) {
                star_base[i] = offset;
                offset += comp_deg(u_graph, s, static_cast<int>(i));
            }
        }
        std::map<int, std::size_t> local_of;
        for (std::size_t i = 0; i < subtree_vertices.size(); ++i) local_of[subtree_vertices[i]] = i;
        for (const auto& p : witness.embedding) {
            std::size_t local = local_of[p.subtree_vertex];
            int gv = p.star ? star_base[local] + p.index
                            : gadget.copy_id(static_cast<int>(local), p.index);
            to_host[static_cast<std::size_t>(gv)] = p.host_vertex;
        }
        std::set<int> hosts;
        for (int hv : to_host) {
            if (hv < 0)
                return fail(std::move(outcome), ExtractStage::Assembly, 0, 0,
                            "gadget vertex left unmapped");
            hosts.insert(hv);
        }
        if (hosts.size() != to_host.size())
            return fail(std::move(outcome), ExtractStage::Assembly, 0, 0,
                        "witness embedding is not injective");
        for (auto [a, b] : gadget.graph.edges())
            if (!host.adjacent(to_host[static_cast<std::size_t>(a)], to_host[static_cast<std::size_t>(b)]))
                return fail(std::move(outcome), ExtractStage::Assembly, 0, 0,
                            "witness embedding misses a gadget edge");
    }

    outcome.witness = std::move(witness);
    return outcome;
}

} // namespace treedens
