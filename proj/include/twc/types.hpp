#pragma once

#include <cstdint>

namespace twc {

// Dense node index; the original input label lives in TemporalGraph::labels.
using NodeId = std::uint32_t;

// Availability time of a temporal edge. Non-negative; t + delta must not
// overflow (checked at construction).
using Time = std::int64_t;

// Index into TemporalGraph::edges; doubles as the node id of the directed
// line graph expansion.
using EdgeIndex = std::uint32_t;

} // namespace twc
