#include "twc/walk_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "twc/errors.hpp"
#include "twc/parallel.hpp"

namespace twc {

namespace {

double l1_norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
}

// Topological order by Kahn peeling; empty result means the graph is cyclic.
std::vector<EdgeIndex> topological_order(const DirectedLineGraph& dlg) {
    const std::size_t m = dlg.node_count();
    std::vector<std::uint32_t> indegree(m, 0);
    for (EdgeIndex x = 0; x < m; ++x)
        for (EdgeIndex y : dlg.successors(x)) ++indegree[y];

    std::vector<EdgeIndex> order;
    order.reserve(m);
    for (EdgeIndex x = 0; x < m; ++x)
        if (indegree[x] == 0) order.push_back(x);
    for (std::size_t head = 0; head < order.size(); ++head)
        for (EdgeIndex y : dlg.successors(order[head]))
            if (--indegree[y] == 0) order.push_back(y);

    if (order.size() != m) order.clear();
    return order;
}

// Solves M x = b in place by LU with partial pivoting. M is row-major n*n.
void lu_solve(std::vector<double>& m, std::vector<double>& b, std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(m[perm[k] * n + k]);
        for (std::size_t r = k + 1; r < n; ++r) {
            const double cand = std::abs(m[perm[r] * n + k]);
            if (cand > best) {
                best = cand;
                pivot = r;
            }
        }
        if (best == 0.0)
            throw DivergenceError("walk-count system is singular; the Neumann series diverges");
        std::swap(perm[k], perm[pivot]);

        const double* row_k = &m[perm[k] * n];
        for (std::size_t r = k + 1; r < n; ++r) {
            double* row_r = &m[perm[r] * n];
            const double factor = row_r[k] / row_k[k];
            if (factor == 0.0) continue;
            row_r[k] = factor;
            for (std::size_t c = k + 1; c < n; ++c) row_r[c] -= factor * row_k[c];
        }
    }

    // Forward then backward substitution under the pivot permutation.
    std::vector<double> y(n);
    for (std::size_t r = 0; r < n; ++r) {
        double s = b[perm[r]];
        const double* row = &m[perm[r] * n];
        for (std::size_t c = 0; c < r; ++c) s -= row[c] * y[c];
        y[r] = s;
    }
    for (std::size_t r = n; r-- > 0;) {
        const double* row = &m[perm[r] * n];
        double s = y[r];
        for (std::size_t c = r + 1; c < n; ++c) s -= row[c] * b[c];
        b[r] = s / row[r];
    }
}

SparseMatrix adjacency_for(const DirectedLineGraph& dlg, WalkDirection direction) {
    SparseMatrix a = SparseMatrix::from_line_graph(dlg);
    // Outgoing counts iterate A itself; incoming counts the reversed graph.
    return direction == WalkDirection::outgoing ? a : a.transposed();
}

} // namespace

SparseMatrix SparseMatrix::from_line_graph(const DirectedLineGraph& dlg) {
    SparseMatrix a;
    const std::size_t m = dlg.node_count();
    a.offsets_.assign(m + 1, 0);
    a.cols_.reserve(dlg.arc_count());
    a.weights_.reserve(dlg.arc_count());
    for (EdgeIndex x = 0; x < m; ++x) {
        const auto succ = dlg.successors(x);
        const auto w = dlg.weights(x);
        a.cols_.insert(a.cols_.end(), succ.begin(), succ.end());
        a.weights_.insert(a.weights_.end(), w.begin(), w.end());
        a.offsets_[x + 1] = a.cols_.size();
    }
    return a;
}

SparseMatrix SparseMatrix::transposed() const {
    SparseMatrix t;
    const std::size_t n = dim();
    t.offsets_.assign(n + 1, 0);
    for (std::uint32_t c : cols_) ++t.offsets_[c + 1];
    for (std::size_t r = 0; r < n; ++r) t.offsets_[r + 1] += t.offsets_[r];

    t.cols_.resize(cols_.size());
    t.weights_.resize(weights_.size());
    std::vector<std::size_t> cursor(t.offsets_.begin(), t.offsets_.end() - 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = offsets_[r]; i < offsets_[r + 1]; ++i) {
            const std::size_t pos = cursor[cols_[i]]++;
            t.cols_[pos] = static_cast<std::uint32_t>(r);
            t.weights_[pos] = weights_[i];
        }
    }
    return t;
}

void SparseMatrix::multiply(std::span<const double> x, std::span<double> y, int threads) const {
    parallel_ranges(dim(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            double s = 0.0;
            for (std::size_t i = offsets_[r]; i < offsets_[r + 1]; ++i)
                s += weights_[i] * x[cols_[i]];
            y[r] = s;
        }
    });
}

bool SparseMatrix::pattern_acyclic() const {
    const std::size_t n = dim();
    std::vector<std::uint32_t> indegree(n, 0);
    for (std::uint32_t c : cols_) ++indegree[c];
    std::vector<std::uint32_t> queue;
    queue.reserve(n);
    for (std::size_t r = 0; r < n; ++r)
        if (indegree[r] == 0) queue.push_back(static_cast<std::uint32_t>(r));
    std::size_t peeled = 0;
    while (!queue.empty()) {
        const std::uint32_t r = queue.back();
        queue.pop_back();
        ++peeled;
        for (std::uint32_t c : row_cols(r))
            if (--indegree[c] == 0) queue.push_back(c);
    }
    return peeled == n;
}

WalkCountVector exact_counts(const DirectedLineGraph& dlg, WalkDirection direction,
                             std::size_t dense_cap) {
    const std::size_t m = dlg.node_count();
    if (m == 0) return {};
    if (m > dense_cap)
        throw CapacityError("line graph has " + std::to_string(m) +
                            " nodes, above the dense solver cap of " + std::to_string(dense_cap) +
                            "; use the approximate or streaming backend");

    const SparseMatrix a = adjacency_for(dlg, direction);
    if (!a.pattern_acyclic()) {
        const double rho = estimate_spectral_radius(a, 200);
        if (rho >= 0.99)
            throw DivergenceError("spectral radius estimate " + std::to_string(rho) +
                                  " is not safely below 1; the walk-count series diverges");
    }

    // Dense I - A, then one LU solve for the count vector.
    std::vector<double> dense(m * m, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
        dense[r * m + r] = 1.0;
        const auto cols = a.row_cols(r);
        const auto w = a.row_weights(r);
        for (std::size_t i = 0; i < cols.size(); ++i) dense[r * m + cols[i]] -= w[i];
    }
    WalkCountVector counts(m, 1.0);
    lu_solve(dense, counts, m);
    return counts;
}

std::pair<WalkCountVector, ConvergenceReport> approx_counts(const DirectedLineGraph& dlg,
                                                            WalkDirection direction,
                                                            const ApproxOptions& options) {
    if (!(options.epsilon > 0.0)) throw ConfigError("epsilon must be positive");
    const std::size_t m = dlg.node_count();
    ConvergenceReport report;
    if (m == 0) return {WalkCountVector{}, report};

    const SparseMatrix a = adjacency_for(dlg, direction);
    WalkCountVector result(m, 1.0); // length-0 walks
    std::vector<double> v(m, 1.0), next(m, 0.0);

    // An acyclic pattern is nilpotent: the sum is finite and the iteration
    // terminates on its own, even if norms first grow for a long stretch.
    const bool guard_divergence = !a.pattern_acyclic();
    const double initial_norm = static_cast<double>(m);
    double best_norm = initial_norm;
    std::uint32_t since_best = 0;

    while (true) {
        a.multiply(v, next, options.threads);
        v.swap(next);
        for (std::size_t i = 0; i < m; ++i) result[i] += v[i];
        ++report.iterations;

        const double norm = l1_norm(v);
        report.final_residual = norm;
        if (norm < options.epsilon) break;

        if (norm < best_norm) {
            best_norm = norm;
            since_best = 0;
        } else if (guard_divergence && ++since_best >= options.divergence_window &&
                   norm > initial_norm) {
            throw DivergenceError(
                "fixed-point iteration is not contracting (||v||_1 = " + std::to_string(norm) +
                " after " + std::to_string(report.iterations) +
                " iterations); the spectral radius is likely >= 1");
        }
    }
    return {std::move(result), report};
}

WalkCountVector dag_counts(const DirectedLineGraph& dlg, WalkDirection direction) {
    const std::size_t m = dlg.node_count();
    const std::vector<EdgeIndex> order = topological_order(dlg);
    if (m > 0 && order.empty())
        throw ContractViolation("dag_counts requires an acyclic line graph");

    WalkCountVector counts(m, 1.0);
    if (direction == WalkDirection::outgoing) {
        // W(u) = 1 + sum over arcs (u, y) of w * W(y): sinks first.
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const EdgeIndex u = *it;
            const auto succ = dlg.successors(u);
            const auto w = dlg.weights(u);
            double s = 0.0;
            for (std::size_t i = 0; i < succ.size(); ++i) s += w[i] * counts[succ[i]];
            counts[u] += s;
        }
    } else {
        // W(y) accumulates finished predecessors: sources first.
        for (EdgeIndex u : order) {
            const auto succ = dlg.successors(u);
            const auto w = dlg.weights(u);
            for (std::size_t i = 0; i < succ.size(); ++i) counts[succ[i]] += w[i] * counts[u];
        }
    }
    return counts;
}

double estimate_spectral_radius(const SparseMatrix& a, std::uint32_t iters) {
    if (iters == 0) throw ContractViolation("estimate_spectral_radius requires iters >= 1");
    const std::size_t n = a.dim();
    if (n == 0 || a.entry_count() == 0) return 0.0;
    if (a.pattern_acyclic()) return 0.0;

    // All-ones start vector: never orthogonal to the Perron eigenvector of a
    // non-negative matrix.
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    std::vector<double> ratios;
    ratios.reserve(iters);
    for (std::uint32_t k = 0; k < iters; ++k) {
        a.multiply(x, y, 1);
        double norm_sq = 0.0;
        for (double t : y) norm_sq += t * t;
        const double norm = std::sqrt(norm_sq);
        if (norm == 0.0) return 0.0;
        ratios.push_back(norm);
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    }
    const std::size_t tail = std::min<std::size_t>(10, ratios.size());
    double sum = 0.0;
    for (std::size_t i = ratios.size() - tail; i < ratios.size(); ++i) sum += ratios[i];
    return sum / static_cast<double>(tail);
}

WalkWeightMatrix project(const DirectedLineGraph& dlg, const WalkCountVector& counts,
                         WalkDirection direction) {
    if (counts.size() != dlg.node_count())
        throw ContractViolation("count vector does not match the line graph");
    WalkWeightMatrix matrix(direction, dlg.graph_node_count());
    const auto& buckets =
        direction == WalkDirection::outgoing ? dlg.out_buckets() : dlg.in_buckets();
    for (const auto& bucket : buckets) {
        const auto members = direction == WalkDirection::outgoing ? dlg.out_members(bucket)
                                                                  : dlg.in_members(bucket);
        double sum = 0.0;
        for (EdgeIndex x : members) sum += counts[x];
        matrix.append_ascending(bucket.node, bucket.time, sum);
    }
    return matrix;
}

} // namespace twc
