#include "treedens/counting.hpp"

#include <algorithm>
#include <queue>
#include <thread>

namespace treedens {

bool is_valid_embedding(const Graph& pattern, const Graph& host, const Embedding& e) {
    if (e.pattern_size() != pattern.vertex_count()) return false;
    std::vector<char> used(static_cast<std::size_t>(host.vertex_count()), 0);
    for (int img : e.assignment) {
        if (!host.has_vertex(img)) return false;
        if (used[static_cast<std::size_t>(img)]) return false;
        used[static_cast<std::size_t>(img)] = 1;
    }
    for (auto [u, v] : pattern.edges())
        if (!host.adjacent(e.assignment[static_cast<std::size_t>(u)],
                           e.assignment[static_cast<std::size_t>(v)]))
            return false;
    return true;
}

namespace {

// Search plan: pattern vertices reordered so every non-root vertex follows a
// neighbor; roots open a new component.
struct SearchPlan {
    std::vector<int> order;                      // pattern vertex at each depth
    std::vector<char> is_root;                   // depth opens a component
    std::vector<std::vector<int>> placed_neighbors; // depths of earlier pattern neighbors
};

SearchPlan make_plan(const Graph& pattern) {
    auto comps = connected_components(pattern);
    std::stable_sort(comps.begin(), comps.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a[0] < b[0];
    });
    SearchPlan plan;
    std::vector<int> depth_of(static_cast<std::size_t>(pattern.vertex_count()), -1);
    for (const auto& comp : comps) {
        int root = comp[0];
        for (int v : comp)
            if (pattern.degree(v) > pattern.degree(root)) root = v;
        std::queue<int> q;
        q.push(root);
        std::vector<char> seen(static_cast<std::size_t>(pattern.vertex_count()), 0);
        seen[static_cast<std::size_t>(root)] = 1;
        bool first = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            depth_of[static_cast<std::size_t>(v)] = static_cast<int>(plan.order.size());
            plan.order.push_back(v);
            plan.is_root.push_back(first ? 1 : 0);
            first = false;
            std::vector<int> placed;
            for (int w : pattern.neighbors(v))
                if (depth_of[static_cast<std::size_t>(w)] != -1)
                    placed.push_back(depth_of[static_cast<std::size_t>(w)]);
            plan.placed_neighbors.push_back(std::move(placed));
            for (int w : pattern.neighbors(v))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    q.push(w);
                }
        }
    }
    return plan;
}

struct Backtracker {
    const SearchPlan& plan;
    const Graph& host;
    std::vector<int> image;      // host vertex per depth
    std::vector<char> used;
    unsigned long long local = 0;
    BigInt flushed = 0;
    const BigInt* limit = nullptr;
    bool stop = false;
    // root restriction for depth 0 (parallel partitioning)
    int root0_begin = 0;
    int root0_end = 0;
    std::vector<Embedding>* sink = nullptr;
    std::int64_t sink_cap = 0;
    const std::vector<int>* order_to_pattern = nullptr;

    Backtracker(const SearchPlan& p, const Graph& h)
        : plan(p), host(h), image(p.order.size(), -1),
          used(static_cast<std::size_t>(h.vertex_count()), 0), root0_end(h.vertex_count()) {}

    BigInt total() const { return flushed + local; }

    void flush() {
        flushed += local;
        local = 0;
    }

    void record(std::size_t depth_count) {
        if (sink) {
            Embedding e;
            e.assignment.assign(depth_count, -1);
            for (std::size_t d = 0; d < depth_count; ++d)
                e.assignment[static_cast<std::size_t>((*order_to_pattern)[d])] = image[d];
            sink->push_back(std::move(e));
            if (static_cast<std::int64_t>(sink->size()) >= sink_cap) stop = true;
            return;
        }
        if (++local >= (1ULL << 62)) flush();
        if (limit) {
            if (total() >= *limit) stop = true;
        }
    }

    void search(std::size_t depth) {
        if (stop) return;
        if (depth == plan.order.size()) {
            record(depth);
            return;
        }
        const auto& anchors = plan.placed_neighbors[depth];
        if (anchors.empty()) {
            int begin = depth == 0 ? root0_begin : 0;
            int end = depth == 0 ? root0_end : host.vertex_count();
            for (int cand = begin; cand < end && !stop; ++cand) place(depth, cand);
        } else {
            // candidates come from the first placed neighbor's host adjacency
            for (int cand : host.neighbors(image[static_cast<std::size_t>(anchors[0])])) {
                if (stop) break;
                place(depth, cand);
            }
        }
    }

    void place(std::size_t depth, int cand) {
        if (used[static_cast<std::size_t>(cand)]) return;
        const auto& anchors = plan.placed_neighbors[depth];
        for (std::size_t i = 0; i < anchors.size(); ++i)
            if (!host.adjacent(image[static_cast<std::size_t>(anchors[i])], cand)) return;
        used[static_cast<std::size_t>(cand)] = 1;
        image[depth] = cand;
        search(depth + 1);
        used[static_cast<std::size_t>(cand)] = 0;
    }
};

} // namespace

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

CountReport count_images(const Forest& t, const Graph& g, const std::optional<BigInt>& limit,
                         int threads) {
    CountReport report;
    report.automorphisms = automorphism_count(t);
    if (t.vertex_count() == 0) {
        report.images = 1; // the empty mapping
        report.copies = 1;
        return report;
    }
    SearchPlan plan = make_plan(t.graph());
    BigInt images = 0;
    bool truncated = false;
    const int n = g.vertex_count();
    if (threads > 1 && !limit && n > 0) {
        int workers = std::min(threads, n);
        std::vector<BigInt> partial(static_cast<std::size_t>(workers), 0);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                Backtracker bt(plan, g);
                bt.root0_begin = static_cast<int>(static_cast<std::int64_t>(n) * w / workers);
                bt.root0_end = static_cast<int>(static_cast<std::int64_t>(n) * (w + 1) / workers);
                bt.search(0);
                bt.flush();
                partial[static_cast<std::size_t>(w)] = bt.flushed;
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& p : partial) images += p;
    } else {
        Backtracker bt(plan, g);
        if (limit) bt.limit = &*limit;
        bt.search(0);
        bt.flush();
        images = bt.flushed;
        truncated = bt.stop;
    }
    report.images = images;
    report.truncated = truncated;
    report.copies = images / report.automorphisms; // exact unless truncated
    return report;
}

CountReport count_copies(const Forest& t, const Graph& g, int threads) {
    CountReport report = count_images(t, g, std::nullopt, threads);
    if (report.images % report.automorphisms != 0)
        throw InternalDefect("image count not divisible by the automorphism count");
    report.copies = report.images / report.automorphisms;
    return report;
}

std::vector<Embedding> enumerate_images(const Forest& t, const Graph& g, std::int64_t cap) {
    if (cap < 1) throw DomainError("enumeration cap must be at least 1");
    std::vector<Embedding> out;
    if (t.vertex_count() == 0) return out;
    SearchPlan plan = make_plan(t.graph());
    std::vector<int> order_to_pattern(plan.order.size());
    for (std::size_t d = 0; d < plan.order.size(); ++d)
        order_to_pattern[d] = plan.order[d];
    Backtracker bt(plan, g);
    bt.sink = &out;
    bt.sink_cap = cap;
    bt.order_to_pattern = &order_to_pattern;
    bt.search(0);
    return out;
}

BigInt oracle_count_images(const Forest& t, const Graph& g) {
    const int h = t.vertex_count();
    const int n = g.vertex_count();
    double space = 1.0;
    for (int i = 0; i < h; ++i) space *= std::max(n, 1);
    if (space > 1e8) throw CapacityError("oracle search space exceeds 10^8 tuples");
    if (h == 0) return 1;
    if (n == 0) return 0;
    // dense adjacency built locally; no shared machinery with count_images
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                       std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    std::vector<Edge> pattern_edges = t.graph().edges();
    std::vector<int> tuple(static_cast<std::size_t>(h), 0);
    BigInt count = 0;
    while (true) {
        bool ok = true;
        for (int i = 0; ok && i < h; ++i)
            for (int j = i + 1; ok && j < h; ++j)
                if (tuple[static_cast<std::size_t>(i)] == tuple[static_cast<std::size_t>(j)]) ok = false;
        if (ok)
            for (const auto& [u, v] : pattern_edges)
                if (!adj[static_cast<std::size_t>(tuple[static_cast<std::size_t>(u)])]
                        [static_cast<std::size_t>(tuple[static_cast<std::size_t>(v)])]) {
                    ok = false;
                    break;
                }
        if (ok) ++count;
        int pos = h - 1;
        while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == n - 1) {
            tuple[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++tuple[static_cast<std::size_t>(pos)];
    }
    return count;
}

} // namespace treedens
