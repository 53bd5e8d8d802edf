#ifndef TREEDENS_EXTRACTION_HPP
#define TREEDENS_EXTRACTION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "treedens/construction.hpp"
#include "treedens/counting.hpp"
#include "treedens/forest.hpp"

namespace treedens {

using BigRational = boost::multiprecision::cpp_rational;

/// h!^2 * t^h: a family of this many images always holds a coherent t-subfamily.
BigInt coherence_threshold(int h, const BigInt& t);

/// h!(t-1)^h + 1: a family of this many distinct h-sets always holds a t-sunflower.
BigInt sunflower_threshold(int h, int t);

/// Unordered pairs (i, j) of images that collide: some host vertex carries
/// different pattern vertices in the two images.
std::vector<std::pair<int, int>> conflict_pairs(const std::vector<Embedding>& images);

/// A maximum coherent subfamily via exact maximum-independent-set search on
/// the conflict graph (guard: at most 200 images). Returned indices are
/// ascending; empty optional when the maximum is below `t`.
std::optional<std::vector<int>> coherent_subfamily(const std::vector<Embedding>& images, int t);

/// Distinct same-size sets over an integer universe.
struct SetFamily {
    std::vector<std::vector<int>> sets; // each sorted
    int element_size = 0;

    static SetFamily from_sets(std::vector<std::vector<int>> sets);
};

struct Sunflower {
    std::vector<int> kernel; // sorted
    std::vector<int> member_indices;
};

/// True iff every pairwise intersection of the chosen members equals the kernel.
bool validate_sunflower(const SetFamily& family, const Sunflower& sf);

/// Erdos--Rado search: greedy maximal disjoint subfamily, else recurse on the
/// link of the globally most frequent element (ties to the smallest element).
/// Never fails on families of size sunflower_threshold(h, t).
std::optional<Sunflower> find_sunflower(const SetFamily& family, int t);

enum class ExtractStage {
    Bucketing,
    Coherence,
    Sunflower,
    KernelComponent, // T - K has no component
    Assembly,
};
std::string to_string(ExtractStage stage);

struct StageFailure {
    ExtractStage stage;
    std::int64_t required = 0;
    std::int64_t available = 0;
    std::string message;
};

/// An embedded copy-plus-stars witness extracted from an abundant image family.
struct WitnessResult {
    Forest subtree;               // U, relabeled 0..|U|-1
    VertexSet subtree_vertices;   // original pattern ids; position i is subtree vertex i
    VertexSet kernel_preimage;    // K, in pattern ids
    std::vector<int> selected_images;

    struct Placement {
        bool star = false;
        int subtree_vertex = 0; // pattern id
        int index = 0;          // copy i or star j, 0-based
        int host_vertex = 0;
    };
    std::vector<Placement> embedding;
};

/// Thresholds reported alongside every run; the pipeline itself runs on
/// whatever images are supplied.
struct ThresholdReport {
    BigInt coherence_need = 0;       // coherence_threshold(h, sunflower_threshold(h,t))
    BigRational images_needed_h = 0; // coherence_need * (rho+1)^h * n^k
    BigRational images_needed_k = 0; // coherence_need * (rho+1)^k * n^k
    std::int64_t images_supplied = 0;
};

struct ExtractionOutcome {
    std::optional<WitnessResult> witness;
    std::optional<StageFailure> failure;
    ThresholdReport thresholds;
    bool ok() const noexcept { return witness.has_value(); }
};

/// Runs the witness pipeline: bucket images by their cover footprint, take a
/// maximum coherent subfamily of the largest bucket, extract a t-sunflower
/// from the image vertex sets, pull back the kernel, and assemble an embedded
/// gadget over a component of T minus the kernel preimage. The returned
/// embedding is re-validated against a freshly built gadget.
ExtractionOutcome extract_witness(const Forest& t_pattern, int s, int t, const Graph& host,
                                  const std::vector<Embedding>& images);

} // namespace treedens

#endif
