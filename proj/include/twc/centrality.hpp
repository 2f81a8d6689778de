#pragma once

#include <cstdint>
#include <vector>

#include "twc/temporal_graph.hpp"
#include "twc/walk_matrix.hpp"
#include "twc/weight_function.hpp"

namespace twc {

enum class CentralityMode { twc, katz, degree_out, degree_in };

/// Scores over a node universe plus a deterministic descending ranking
/// (ties broken by ascending node id). Full-graph results carry the dense
/// universe 0..n-1; top-k restrictions carry a subset.
struct CentralityResult {
    CentralityMode mode = CentralityMode::twc;
    std::vector<NodeId> nodes;   // ascending
    std::vector<double> scores;  // parallel to nodes
    std::vector<NodeId> ranking; // node ids, score descending

    std::size_t size() const { return nodes.size(); }

    /// Competition rank of the i-th ranking position (1-based; equal scores
    /// share a rank).
    std::vector<std::uint32_t> competition_ranks() const;
};

struct CombineStats {
    std::uint64_t entries_touched = 0;
    std::uint64_t phi_m_evaluations = 0;
};

/// Centrality for phi_m == 1 in time linear in the matrix entries: one merged
/// ascending sweep per node with a running prefix sum of incoming weight.
CentralityResult combine_fast(const WalkWeightMatrix& win, const WalkWeightMatrix& wout,
                              CombineStats* stats = nullptr, int threads = 1);

/// General pairwise combination: every key pair (t1, t2) with t1 <= t2
/// contributes win * wout * phi_m(t1, t2). With phi_m == one this reproduces
/// combine_fast bit for bit (same summation order).
CentralityResult combine_general(const WalkWeightMatrix& win, const WalkWeightMatrix& wout,
                                 const WeightFunction& phi_m, CombineStats* stats = nullptr,
                                 int threads = 1);

/// Row sums of the outgoing matrix: temporal Katz centrality when the matrix
/// was computed with a constant-alpha weight.
CentralityResult katz_mode(const WalkWeightMatrix& wout);

/// Total number of outgoing (or incoming) temporal edges per node.
CentralityResult degree_mode(const TemporalGraph& g, WalkDirection direction);

} // namespace twc
