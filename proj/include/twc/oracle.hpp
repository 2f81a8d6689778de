#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "twc/centrality.hpp"
#include "twc/temporal_graph.hpp"
#include "twc/walk_matrix.hpp"
#include "twc/weight_function.hpp"

namespace twc {

/// Exhaustive list of temporal walks of length 1..max_length, indexed by
/// their start (node, starting time) and end (node, arrival time). Walk
/// identity is the edge-index sequence, so parallel edges yield distinct
/// walks. Deliberately unoptimized: this is the ground truth the fast
/// backends are checked against.
struct WalkEnumeration {
    std::vector<std::vector<EdgeIndex>> walks;
    std::map<std::pair<NodeId, Time>, std::vector<std::uint32_t>> by_start;
    std::map<std::pair<NodeId, Time>, std::vector<std::uint32_t>> by_end;
    std::size_t max_length = 0;
};

/// Depth-first extension over time-sorted edges. max_length must be >= 1;
/// with delta = 0 it is the only thing bounding the walk set. Aborts with a
/// capacity error when more than `cap` walks would be produced.
WalkEnumeration enumerate_walks(const TemporalGraph& g, std::size_t max_length,
                                std::size_t cap = 10'000'000);

/// Walk-weight sums per (node, time) computed directly from the enumeration.
WalkWeightMatrix oracle_matrix(const TemporalGraph& g, const WalkEnumeration& walks,
                               WalkDirection direction, const WeightFunction& phi);

/// Temporal walk centrality by explicit double summation over all enumerated
/// in-walk / out-walk pairs per node.
CentralityResult oracle_centrality(const TemporalGraph& g, const WeightConfig& config,
                                   std::size_t max_length, std::size_t cap = 10'000'000);

} // namespace twc
