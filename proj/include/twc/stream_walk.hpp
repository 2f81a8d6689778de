#pragma once

#include <cstdint>

#include "twc/temporal_graph.hpp"
#include "twc/walk_matrix.hpp"
#include "twc/weight_function.hpp"

namespace twc {

/// One streaming pass. `inner_iterations` counts how many existing matrix
/// entries the pass combined with an edge; it is bounded by m * tau_max for
/// the respective direction.
struct StreamResult {
    WalkWeightMatrix matrix;
    std::uint64_t inner_iterations = 0;
};

/// Forward pass over the chronological edge stream. For each edge (u, v, t),
/// the entry (v, t + delta) gains 1 plus the weighted extensions of every
/// walk already ending at u no later than t. Requires delta > 0 (strict
/// walks); with delta = 0 the walk set may be infinite and the line-graph
/// backends apply instead.
StreamResult compute_incoming(const TemporalGraph& g, const WeightFunction& phi_in);

/// Symmetric backward pass producing the outgoing-walk matrix: edges are
/// processed in reverse chronological order and the entry (u, t) gains 1 plus
/// the weighted extensions of every walk already starting at v at t' >= t + delta.
StreamResult compute_outgoing(const TemporalGraph& g, const WeightFunction& phi_out);

} // namespace twc
