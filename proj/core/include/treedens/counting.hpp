#ifndef TREEDENS_COUNTING_HPP
#define TREEDENS_COUNTING_HPP

#include <optional>
#include <vector>

#include "treedens/forest.hpp"
#include "treedens/graph.hpp"

namespace treedens {

/// Injective edge-preserving map of a pattern into a host; assignment[x] is
/// the host vertex carrying pattern vertex x.
struct Embedding {
    std::vector<int> assignment;
    int pattern_size() const noexcept { return static_cast<int>(assignment.size()); }
    bool operator==(const Embedding&) const = default;
};

bool is_valid_embedding(const Graph& pattern, const Graph& host, const Embedding& e);

struct CountReport {
    BigInt images = 0;
    BigInt copies = 0;
    BigInt automorphisms = 1;
    bool truncated = false; // counts are lower bounds when set
};

/// Exact I(T,G) by backtracking over pattern vertices in a connectivity-aware
/// order (per component, BFS from a maximum-degree root; larger components
/// first). Stops early once `limit` images are found. `threads` partitions the
/// placements of the first component's root; the count is thread-independent.
CountReport count_images(const Forest& t, const Graph& g,
                         const std::optional<BigInt>& limit = std::nullopt, int threads = 1);

/// Exact C(T,G) = I(T,G) / |Aut(T)|; non-exact division is an internal defect.
CountReport count_copies(const Forest& t, const Graph& g, int threads = 1);

/// First `cap` embeddings in the deterministic backtracking order.
std::vector<Embedding> enumerate_images(const Forest& t, const Graph& g, std::int64_t cap);

/// Independent ground truth: iterates every ordered |V(T)|-tuple of host
/// vertices and checks injectivity and edge preservation directly. Shares no
/// code with count_images. Guard: |V(G)|^|V(T)| <= 10^8.
BigInt oracle_count_images(const Forest& t, const Graph& g);

BigInt factorial(int n);

} // namespace treedens

#endif
