#include "twc/oracle.hpp"

#include <algorithm>

#include "twc/errors.hpp"

namespace twc {

namespace {

// Out-edge indices per node, sorted by starting time.
std::vector<std::vector<EdgeIndex>> out_lists(const TemporalGraph& g) {
    std::vector<std::vector<EdgeIndex>> outs(g.node_count());
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) outs[g.edges[e].src].push_back(e);
    for (auto& list : outs)
        std::sort(list.begin(), list.end(),
                  [&](EdgeIndex a, EdgeIndex b) { return g.edges[a].t < g.edges[b].t; });
    return outs;
}

} // namespace

WalkEnumeration enumerate_walks(const TemporalGraph& g, std::size_t max_length, std::size_t cap) {
    if (max_length < 1) throw ContractViolation("max_length must be at least 1");

    WalkEnumeration result;
    result.max_length = max_length;
    const auto outs = out_lists(g);

    std::vector<EdgeIndex> stack;
    auto record = [&]() {
        if (result.walks.size() >= cap)
            throw CapacityError("walk enumeration exceeds the cap of " + std::to_string(cap) +
                                " walks");
        const std::uint32_t id = static_cast<std::uint32_t>(result.walks.size());
        const TemporalEdge& first = g.edges[stack.front()];
        const TemporalEdge& last = g.edges[stack.back()];
        result.by_start[{first.src, first.t}].push_back(id);
        result.by_end[{last.dst, last.t + g.delta}].push_back(id);
        result.walks.push_back(stack);
    };

    // Plain DFS; extensions are the continuations that start no earlier than
    // the current arrival time.
    auto extend = [&](auto&& self, const TemporalEdge& last) -> void {
        if (stack.size() >= max_length) return;
        const Time arrival = last.t + g.delta;
        const auto& candidates = outs[last.dst];
        auto it = std::lower_bound(candidates.begin(), candidates.end(), arrival,
                                   [&](EdgeIndex e, Time key) { return g.edges[e].t < key; });
        for (; it != candidates.end(); ++it) {
            stack.push_back(*it);
            record();
            self(self, g.edges[*it]);
            stack.pop_back();
        }
    };

    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        stack.push_back(e);
        record();
        extend(extend, g.edges[e]);
        stack.pop_back();
    }
    return result;
}

WalkWeightMatrix oracle_matrix(const TemporalGraph& g, const WalkEnumeration& walks,
                               WalkDirection direction, const WeightFunction& phi) {
    WalkWeightMatrix matrix(direction, g.node_count());
    const auto& groups = direction == WalkDirection::incoming ? walks.by_end : walks.by_start;
    // std::map iterates (node, time) in ascending order, as append requires.
    for (const auto& [key, walk_ids] : groups) {
        double sum = 0.0;
        std::vector<TemporalEdge> walk;
        for (std::uint32_t id : walk_ids) {
            walk.clear();
            for (EdgeIndex e : walks.walks[id]) walk.push_back(g.edges[e]);
            sum += walk_weight(phi, walk, g.delta);
        }
        matrix.append_ascending(key.first, key.second, sum);
    }
    return matrix;
}

CentralityResult oracle_centrality(const TemporalGraph& g, const WeightConfig& config,
                                   std::size_t max_length, std::size_t cap) {
    const WalkEnumeration walks = enumerate_walks(g, max_length, cap);
    const WalkWeightMatrix win = oracle_matrix(g, walks, WalkDirection::incoming, config.phi_in);
    const WalkWeightMatrix wout = oracle_matrix(g, walks, WalkDirection::outgoing, config.phi_out);

    // Independent of the combine operations under test: a literal double sum
    // over all (arrival, start) pairs with t1 <= t2.
    CentralityResult result;
    result.mode = CentralityMode::twc;
    const std::size_t n = g.node_count();
    result.scores.assign(n, 0.0);
    for (NodeId v = 0; v < n; ++v) {
        double c = 0.0;
        for (const auto& ie : win.entries(v))
            for (const auto& oe : wout.entries(v))
                if (ie.time <= oe.time)
                    c += ie.weight * oe.weight * config.phi_m(ie.time, oe.time);
        result.scores[v] = c;
    }
    result.nodes.resize(n);
    for (std::size_t v = 0; v < n; ++v) result.nodes[v] = static_cast<NodeId>(v);
    result.ranking = result.nodes;
    std::sort(result.ranking.begin(), result.ranking.end(), [&](NodeId a, NodeId b) {
        return result.scores[a] != result.scores[b] ? result.scores[a] > result.scores[b] : a < b;
    });
    return result;
}

} // namespace twc
