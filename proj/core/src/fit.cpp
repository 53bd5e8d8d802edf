#include "treedens/fit.hpp"

#include <cmath>

#include "treedens/construction.hpp"

namespace treedens {

FitReport run_fit(const Forest& t, int s, const std::vector<std::int64_t>& n_values,
                  double tolerance, int threads) {
    if (n_values.size() < 2) throw DomainError("slope fitting needs at least two orders");
    AlphaResult alpha = alpha_s(t, s);
    const std::int64_t floor_n = 2 * t.vertex_count() + 2 * alpha.value;
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (i > 0 && n_values[i] <= n_values[i - 1])
            throw DomainError("orders must be strictly increasing");
        if (n_values[i] < floor_n)
            throw DomainError("order " + std::to_string(n_values[i]) +
                              " below 2|V(T)| + 2*alpha_s(T)");
    }
    FitReport report;
    report.target = alpha.value;
    report.tolerance = tolerance;
    for (std::int64_t n : n_values) {
        LowerBoundInstance inst = build_lower_bound_graph(t, s, n);
        CountReport count = count_copies(t, inst.graph, threads);
        if (count.copies == 0) throw InternalDefect("blow-up instance lost all copies");
        report.points.emplace_back(n, count.copies);
    }
    // least squares on (log n, log count)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(report.points.size());
    for (const auto& [n, count] : report.points) {
        double x = std::log(static_cast<double>(n));
        double y = std::log(count.convert_to<double>());
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    report.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return report;
}

} // namespace treedens
