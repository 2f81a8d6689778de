#include "twc/stream_walk.hpp"

#include <algorithm>

#include "twc/errors.hpp"

namespace twc {

namespace {

void require_strict(const TemporalGraph& g) {
    if (g.delta <= 0)
        throw ConfigError(
            "streaming backend requires delta > 0; use the exact or approximate "
            "line-graph backend for non-strict walks");
}

} // namespace

StreamResult compute_incoming(const TemporalGraph& g, const WeightFunction& phi_in) {
    require_strict(g);
    StreamResult result{WalkWeightMatrix(WalkDirection::incoming, g.node_count()), 0};
    WalkWeightMatrix& w = result.matrix;

    // Edges arrive in chronological order, so the arrival key t + delta is
    // non-decreasing per node and rows grow by appending at the back.
    for (const TemporalEdge& e : g.edges) {
        double added = 1.0; // the length-one walk (e) itself
        // Entries at the source are keyed by arrival time t', which already
        // includes the transition delay, so t' <= t is exactly the walk
        // condition t_prev + delta <= t. With delta > 0 the entry this edge
        // creates (key t + delta > t) can never feed a same-time edge, which
        // makes the pass independent of tie order.
        for (const auto& entry : w.entries(e.src)) {
            if (entry.time > e.t) break;
            added += entry.weight * phi_in(entry.time, e.t);
            ++result.inner_iterations;
        }
        w.append_ascending(e.dst, e.t + g.delta, added);
    }
    return result;
}

StreamResult compute_outgoing(const TemporalGraph& g, const WeightFunction& phi_out) {
    require_strict(g);
    const std::size_t n = g.node_count();
    StreamResult result{WalkWeightMatrix(WalkDirection::outgoing, n), 0};

    // Reverse pass: rows are built with descending start-time keys and
    // reversed once at the end.
    std::vector<std::vector<WalkWeightMatrix::Entry>> rows(n);
    for (auto it = g.edges.rbegin(); it != g.edges.rend(); ++it) {
        const TemporalEdge& e = *it;
        const Time arrival = e.t + g.delta;
        double added = 1.0;
        for (const auto& entry : rows[e.dst]) {
            if (entry.time < arrival) break;
            added += entry.weight * phi_out(arrival, entry.time);
            ++result.inner_iterations;
        }
        auto& row = rows[e.src];
        if (!row.empty() && row.back().time == e.t)
            row.back().weight += added;
        else
            row.push_back({e.t, added});
    }

    for (NodeId v = 0; v < n; ++v) {
        std::reverse(rows[v].begin(), rows[v].end());
        result.matrix.set_row(v, std::move(rows[v]));
    }
    return result;
}

} // namespace twc
