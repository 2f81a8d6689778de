#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "twc/centrality.hpp"
#include "twc/temporal_graph.hpp"
#include "twc/walk_algebra.hpp"
#include "twc/weight_function.hpp"

namespace twc {

/// Interchangeable ways of producing the walk-weight matrices:
///   stream  two passes over the edge stream (delta > 0 only)
///   exact   line-graph expansion + dense Neumann solve
///   approx  line-graph expansion + fixed-point iteration
///   dag     line-graph expansion + topological relaxation (acyclic only)
///   oracle  exhaustive walk enumeration (small instances only)
enum class Method { stream, exact, approx, dag, oracle };

struct PipelineOptions {
    Method method = Method::stream;
    WeightConfig weights;
    CentralityMode mode = CentralityMode::twc;
    double epsilon = 1e-9;
    std::size_t max_length = 0; // oracle walk-length cap; 0 = derive (delta > 0 only)
    std::size_t dense_cap = 20000;
    std::size_t oracle_cap = 10'000'000;
    int threads = 1;
};

struct PipelineDiagnostics {
    std::optional<ConvergenceReport> convergence_in;
    std::optional<ConvergenceReport> convergence_out;
    std::uint64_t stream_inner_iterations_in = 0;
    std::uint64_t stream_inner_iterations_out = 0;
    std::uint64_t combine_entries_touched = 0;
    std::uint64_t matrix_entries = 0;
    double seconds_matrices = 0.0;
    double seconds_combine = 0.0;
};

const char* method_name(Method m);
const char* mode_name(CentralityMode m);

/// Runs the selected backend end to end and combines the matrices into a
/// centrality result.
CentralityResult compute_centrality(const TemporalGraph& g, const PipelineOptions& options,
                                    PipelineDiagnostics* diagnostics = nullptr);

} // namespace twc
