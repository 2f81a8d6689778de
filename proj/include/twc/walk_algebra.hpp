#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "twc/line_graph.hpp"
#include "twc/walk_matrix.hpp"

namespace twc {

/// CSR view of the line graph's weighted adjacency: row x holds the
/// out-degree(x) arc weights of x. All entries are non-negative.
class SparseMatrix {
public:
    static SparseMatrix from_line_graph(const DirectedLineGraph& dlg);

    /// Arc-reversed copy; multiplying by it counts walks in the opposite
    /// direction.
    SparseMatrix transposed() const;

    std::size_t dim() const { return offsets_.size() - 1; }
    std::size_t entry_count() const { return cols_.size(); }

    std::span<const std::uint32_t> row_cols(std::size_t r) const {
        return {cols_.data() + offsets_[r], offsets_[r + 1] - offsets_[r]};
    }
    std::span<const double> row_weights(std::size_t r) const {
        return {weights_.data() + offsets_[r], offsets_[r + 1] - offsets_[r]};
    }

    /// y = A x, row-parallel when threads > 1. Per-row summation order is
    /// fixed, so results are identical for every thread count.
    void multiply(std::span<const double> x, std::span<double> y, int threads = 1) const;

    bool pattern_acyclic() const;

private:
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> cols_;
    std::vector<double> weights_;
};

/// Weighted static walk counts per line-graph node, all lengths >= 0; every
/// entry is at least 1 (the empty walk).
using WalkCountVector = std::vector<double>;

struct ConvergenceReport {
    std::uint64_t iterations = 0;
    double final_residual = 0.0; // L1 norm of the last added increment
    std::optional<double> spectral_radius_estimate;
};

struct ApproxOptions {
    double epsilon = 1e-9;
    int threads = 1;
    std::uint32_t divergence_window = 64;
};

/// Exact unbounded walk counts by solving (I - A) x = 1 (outgoing) or the
/// transposed system (incoming) with a dense LU factorization. Guarded by a
/// spectral-radius estimate on cyclic inputs and by `dense_cap` on size.
WalkCountVector exact_counts(const DirectedLineGraph& dlg, WalkDirection direction,
                             std::size_t dense_cap = 20000);

/// Fixed-point iteration  v <- A v; r <- r + v  until ||v||_1 < epsilon.
/// After k iterations r holds the length-<=k partial Neumann sum exactly.
std::pair<WalkCountVector, ConvergenceReport> approx_counts(const DirectedLineGraph& dlg,
                                                            WalkDirection direction,
                                                            const ApproxOptions& options);

/// Linear-time counts on acyclic expansions: one relaxation per arc in
/// (reverse) topological order. Throws on cyclic input.
WalkCountVector dag_counts(const DirectedLineGraph& dlg, WalkDirection direction);

/// Power-iteration estimate of the spectral radius (mean of the trailing ten
/// L2 growth ratios). Returns 0 immediately for acyclic patterns.
double estimate_spectral_radius(const SparseMatrix& a, std::uint32_t iters);

/// Maps line-graph walk counts back to the temporal graph: the matrix entry
/// (v, t) is the sum of counts over the bucket X_out(v, t) or X_in(v, t).
/// Because each line-graph node is itself a length-one temporal walk, the
/// projected values count temporal walks of length >= 1.
WalkWeightMatrix project(const DirectedLineGraph& dlg, const WalkCountVector& counts,
                         WalkDirection direction);

} // namespace twc
