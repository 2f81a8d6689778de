#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "twc/temporal_graph.hpp"
#include "twc/types.hpp"
#include "twc/weight_function.hpp"

namespace twc {

/// Static weighted digraph with one node per temporal edge: the node for
/// (u, v, t) has an arc to the node for (x, y, s) iff v = x and t + delta <= s,
/// weighted by phi(t + delta, s). Temporal walks of length l correspond
/// one-to-one to walks of length l - 1 here.
///
/// The x_out / x_in buckets group line-graph nodes by (temporal node,
/// starting time) and (temporal node, arrival time); every line-graph node
/// lies in exactly one bucket of each map.
class DirectedLineGraph {
public:
    struct Bucket {
        NodeId node;
        Time time;
        std::uint32_t offset; // into the member array
        std::uint32_t count;
    };

    std::size_t node_count() const { return offsets_.size() - 1; }
    std::size_t arc_count() const { return targets_.size(); }
    std::size_t graph_node_count() const { return graph_node_count_; }

    std::span<const EdgeIndex> successors(EdgeIndex x) const {
        return {targets_.data() + offsets_[x], offsets_[x + 1] - offsets_[x]};
    }
    std::span<const double> weights(EdgeIndex x) const {
        return {arc_weights_.data() + offsets_[x], offsets_[x + 1] - offsets_[x]};
    }

    /// Buckets sorted by (node, time).
    const std::vector<Bucket>& out_buckets() const { return out_buckets_; }
    const std::vector<Bucket>& in_buckets() const { return in_buckets_; }
    std::span<const EdgeIndex> out_members(const Bucket& b) const {
        return {out_members_.data() + b.offset, b.count};
    }
    std::span<const EdgeIndex> in_members(const Bucket& b) const {
        return {in_members_.data() + b.offset, b.count};
    }

    friend DirectedLineGraph expand(const TemporalGraph& g, const WeightFunction& phi);

private:
    std::size_t graph_node_count_ = 0;
    std::vector<std::size_t> offsets_; // node_count + 1
    std::vector<EdgeIndex> targets_;
    std::vector<double> arc_weights_;
    std::vector<Bucket> out_buckets_, in_buckets_;
    std::vector<EdgeIndex> out_members_, in_members_;
};

/// Builds the expansion. Works for delta = 0 (possibly cyclic) and delta > 0
/// (always acyclic). Successor lists are produced per middle node from
/// time-sorted edge groups rather than all-pairs tests.
DirectedLineGraph expand(const TemporalGraph& g, const WeightFunction& phi);

/// True iff Kahn peeling consumes every node.
bool is_acyclic(const DirectedLineGraph& dlg);

/// GraphViz rendering with nodes labelled n^t_{uv} via the original labels.
std::string to_dot(const DirectedLineGraph& dlg, const TemporalGraph& g);

} // namespace twc
