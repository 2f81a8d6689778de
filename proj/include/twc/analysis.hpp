#pragma once

#include <cstdint>
#include <span>

#include "twc/centrality.hpp"

namespace twc {

/// Kendall tau-b: tie-corrected rank correlation in [-1, 1].
struct RankCorrelation {
    double tau = 0.0;
    std::uint64_t n_pairs = 0; // n * (n - 1) / 2
};

/// Mean of |C - C_hat| / C over the support W = {v : C(v) != 0}.
struct ErrorReport {
    double mean_relative_error = 0.0;
    std::uint64_t support = 0;
    bool empty_support = false;
};

/// tau-b over two aligned score vectors in O(n log n) (merge-sort inversion
/// counting). Fully tied inputs have an undefined tau; 0 is returned.
RankCorrelation kendall_tau(std::span<const double> a, std::span<const double> b);

/// tau-b over two results; their node universes must coincide.
RankCorrelation kendall_tau(const CentralityResult& a, const CentralityResult& b);

ErrorReport mean_relative_error(const CentralityResult& exact, const CentralityResult& approx);

/// Restriction to the ceil(n * fraction) highest-scoring nodes, taken in
/// ranking order. Requires 0 < fraction <= 1.
CentralityResult top_k(const CentralityResult& result, double fraction);

} // namespace twc
