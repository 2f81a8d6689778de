#include "twc/pipeline.hpp"

#include <algorithm>
#include <chrono>

#include "twc/errors.hpp"
#include "twc/line_graph.hpp"
#include "twc/oracle.hpp"
#include "twc/stream_walk.hpp"

namespace twc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Strict walks cannot revisit a starting time, so their length is bounded by
// the number of distinct availability times.
std::size_t strict_length_bound(const TemporalGraph& g) {
    std::vector<Time> times;
    times.reserve(g.edge_count());
    for (const TemporalEdge& e : g.edges) times.push_back(e.t);
    std::sort(times.begin(), times.end());
    const auto distinct = std::unique(times.begin(), times.end()) - times.begin();
    return static_cast<std::size_t>(distinct) + 1;
}

struct MatrixPair {
    WalkWeightMatrix win;
    WalkWeightMatrix wout;
};

MatrixPair matrices_via_line_graph(const TemporalGraph& g, const PipelineOptions& options,
                                   PipelineDiagnostics* diag) {
    const WeightConfig& w = options.weights;
    const DirectedLineGraph dlg_in = expand(g, w.phi_in);
    // One expansion serves both directions when the weights coincide.
    const DirectedLineGraph dlg_out_storage =
        w.phi_out == w.phi_in ? DirectedLineGraph{} : expand(g, w.phi_out);
    const DirectedLineGraph& dlg_out = w.phi_out == w.phi_in ? dlg_in : dlg_out_storage;

    auto counts = [&](const DirectedLineGraph& dlg, WalkDirection direction,
                      std::optional<ConvergenceReport>* report) -> WalkCountVector {
        switch (options.method) {
            case Method::exact:
                return exact_counts(dlg, direction, options.dense_cap);
            case Method::dag:
                return dag_counts(dlg, direction);
            case Method::approx: {
                ApproxOptions approx{options.epsilon, options.threads, 64};
                auto [vec, rep] = approx_counts(dlg, direction, approx);
                if (report) *report = rep;
                return vec;
            }
            default:
                throw ContractViolation("not a line-graph method");
        }
    };

    std::optional<ConvergenceReport> rep_in, rep_out;
    WalkCountVector in_counts = counts(dlg_in, WalkDirection::incoming, &rep_in);
    WalkCountVector out_counts = counts(dlg_out, WalkDirection::outgoing, &rep_out);
    if (diag) {
        diag->convergence_in = rep_in;
        diag->convergence_out = rep_out;
    }
    return {project(dlg_in, in_counts, WalkDirection::incoming),
            project(dlg_out, out_counts, WalkDirection::outgoing)};
}

MatrixPair compute_matrices(const TemporalGraph& g, const PipelineOptions& options,
                            PipelineDiagnostics* diag) {
    switch (options.method) {
        case Method::stream: {
            StreamResult in = compute_incoming(g, options.weights.phi_in);
            StreamResult out = compute_outgoing(g, options.weights.phi_out);
            if (diag) {
                diag->stream_inner_iterations_in = in.inner_iterations;
                diag->stream_inner_iterations_out = out.inner_iterations;
            }
            return {std::move(in.matrix), std::move(out.matrix)};
        }
        case Method::oracle: {
            std::size_t max_length = options.max_length;
            if (max_length == 0) {
                if (g.delta == 0)
                    throw ConfigError("the oracle needs an explicit max walk length when delta = 0");
                max_length = strict_length_bound(g);
            }
            const WalkEnumeration walks = enumerate_walks(g, max_length, options.oracle_cap);
            return {oracle_matrix(g, walks, WalkDirection::incoming, options.weights.phi_in),
                    oracle_matrix(g, walks, WalkDirection::outgoing, options.weights.phi_out)};
        }
        default:
            return matrices_via_line_graph(g, options, diag);
    }
}

} // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::stream: return "stream";
        case Method::exact: return "exact";
        case Method::approx: return "approx";
        case Method::dag: return "dag";
        case Method::oracle: return "oracle";
    }
    return "?";
}

const char* mode_name(CentralityMode m) {
    switch (m) {
        case CentralityMode::twc: return "twc";
        case CentralityMode::katz: return "katz";
        case CentralityMode::degree_out: return "degree-out";
        case CentralityMode::degree_in: return "degree-in";
    }
    return "?";
}

CentralityResult compute_centrality(const TemporalGraph& g, const PipelineOptions& options,
                                    PipelineDiagnostics* diagnostics) {
    if (options.mode == CentralityMode::degree_out)
        return degree_mode(g, WalkDirection::outgoing);
    if (options.mode == CentralityMode::degree_in)
        return degree_mode(g, WalkDirection::incoming);

    const auto t0 = Clock::now();
    MatrixPair matrices = compute_matrices(g, options, diagnostics);
    if (diagnostics) {
        diagnostics->seconds_matrices = seconds_since(t0);
        diagnostics->matrix_entries =
            matrices.win.total_entries() + matrices.wout.total_entries();
    }

    const auto t1 = Clock::now();
    CentralityResult result = [&] {
        if (options.mode == CentralityMode::katz) return katz_mode(matrices.wout);
        CombineStats stats;
        CentralityResult r =
            options.weights.phi_m == WeightFunction::one()
                ? combine_fast(matrices.win, matrices.wout, &stats, options.threads)
                : combine_general(matrices.win, matrices.wout, options.weights.phi_m, &stats,
                                  options.threads);
        if (diagnostics) diagnostics->combine_entries_touched = stats.entries_touched;
        return r;
    }();
    if (diagnostics) diagnostics->seconds_combine = seconds_since(t1);
    return result;
}

} // namespace twc
