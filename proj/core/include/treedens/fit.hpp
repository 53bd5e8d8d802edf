#ifndef TREEDENS_FIT_HPP
#define TREEDENS_FIT_HPP

#include <cstdint>
#include <vector>

#include "treedens/counting.hpp"
#include "treedens/forest.hpp"

namespace treedens {

/// Exact copy counts of T in the blow-up instances at the requested orders,
/// with the least-squares slope of log(count) against log(n).
struct FitReport {
    std::vector<std::pair<std::int64_t, BigInt>> points;
    double slope = 0.0;
    int target = 0; // alpha_s(T)
    double tolerance = 0.0;
    bool within_tolerance() const noexcept {
        return slope >= target - tolerance && slope <= target + tolerance;
    }
};

/// Builds the blow-up instance for each n, counts copies exactly, and fits the
/// log-log slope. Orders must be strictly increasing with n >= 2|V(T)| +
/// 2*alpha_s(T) so that the guaranteed-count regime applies.
FitReport run_fit(const Forest& t, int s, const std::vector<std::int64_t>& n_values,
                  double tolerance = 0.2, int threads = 1);

} // namespace treedens

#endif
