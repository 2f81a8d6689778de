#include "twc/line_graph.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "twc/errors.hpp"

namespace twc {

namespace {

// Groups edge indices by key node, each group sorted by the given time.
// Returns (members, row offsets per node).
struct Grouping {
    std::vector<EdgeIndex> members;
    std::vector<std::uint32_t> offsets; // n + 1
};

template <typename NodeOf, typename TimeOf>
Grouping group_edges(const TemporalGraph& g, NodeOf node_of, TimeOf time_of) {
    const std::size_t n = g.node_count();
    const std::size_t m = g.edge_count();
    Grouping grouping;
    grouping.offsets.assign(n + 1, 0);
    for (EdgeIndex e = 0; e < m; ++e) ++grouping.offsets[node_of(g.edges[e]) + 1];
    for (std::size_t v = 0; v < n; ++v) grouping.offsets[v + 1] += grouping.offsets[v];

    grouping.members.resize(m);
    std::vector<std::uint32_t> cursor(grouping.offsets.begin(), grouping.offsets.end() - 1);
    for (EdgeIndex e = 0; e < m; ++e)
        grouping.members[cursor[node_of(g.edges[e])]++] = e;

    for (std::size_t v = 0; v < n; ++v)
        std::sort(grouping.members.begin() + grouping.offsets[v],
                  grouping.members.begin() + grouping.offsets[v + 1],
                  [&](EdgeIndex a, EdgeIndex b) {
                      const Time ta = time_of(g.edges[a]), tb = time_of(g.edges[b]);
                      return ta != tb ? ta < tb : a < b;
                  });
    return grouping;
}

std::vector<DirectedLineGraph::Bucket> bucketize(const TemporalGraph& g,
                                                 const Grouping& grouping,
                                                 Time shift) {
    std::vector<DirectedLineGraph::Bucket> buckets;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        std::uint32_t i = grouping.offsets[v];
        const std::uint32_t end = grouping.offsets[v + 1];
        while (i < end) {
            const Time key = g.edges[grouping.members[i]].t + shift;
            std::uint32_t j = i;
            while (j < end && g.edges[grouping.members[j]].t + shift == key) ++j;
            buckets.push_back({v, key, i, j - i});
            i = j;
        }
    }
    return buckets;
}

} // namespace

DirectedLineGraph expand(const TemporalGraph& g, const WeightFunction& phi) {
    const std::size_t m = g.edge_count();
    if (m > std::numeric_limits<EdgeIndex>::max())
        throw CapacityError("too many temporal edges for a line graph expansion");

    // Out-edges of each node sorted by starting time, in-edges by arrival time.
    Grouping outs = group_edges(
        g, [](const TemporalEdge& e) { return e.src; },
        [](const TemporalEdge& e) { return e.t; });
    Grouping ins = group_edges(
        g, [&](const TemporalEdge& e) { return e.dst; },
        [&](const TemporalEdge& e) { return e.t + g.delta; });

    DirectedLineGraph dlg;
    dlg.graph_node_count_ = g.node_count();
    dlg.offsets_.assign(m + 1, 0);

    // Successors of edge e = (u, v, t) are the out-edges of v starting at or
    // after t + delta: a suffix of v's time-sorted out list.
    auto suffix_begin = [&](NodeId v, Time arrival) {
        const auto first = outs.members.begin() + outs.offsets[v];
        const auto last = outs.members.begin() + outs.offsets[v + 1];
        return std::lower_bound(first, last, arrival, [&](EdgeIndex a, Time key) {
            return g.edges[a].t < key;
        });
    };

    for (EdgeIndex e = 0; e < m; ++e) {
        const TemporalEdge& edge = g.edges[e];
        const auto begin = suffix_begin(edge.dst, edge.t + g.delta);
        const auto end = outs.members.begin() + outs.offsets[edge.dst + 1];
        dlg.offsets_[e + 1] = static_cast<std::size_t>(end - begin);
    }
    for (EdgeIndex e = 0; e < m; ++e) dlg.offsets_[e + 1] += dlg.offsets_[e];

    dlg.targets_.resize(dlg.offsets_[m]);
    dlg.arc_weights_.resize(dlg.offsets_[m]);
    for (EdgeIndex e = 0; e < m; ++e) {
        const TemporalEdge& edge = g.edges[e];
        const Time arrival = edge.t + g.delta;
        auto it = suffix_begin(edge.dst, arrival);
        const auto end = outs.members.begin() + outs.offsets[edge.dst + 1];
        std::size_t pos = dlg.offsets_[e];
        for (; it != end; ++it, ++pos) {
            dlg.targets_[pos] = *it;
            dlg.arc_weights_[pos] = phi(arrival, g.edges[*it].t);
        }
    }

    dlg.out_buckets_ = bucketize(g, outs, 0);
    dlg.in_buckets_ = bucketize(g, ins, g.delta);
    dlg.out_members_ = std::move(outs.members);
    dlg.in_members_ = std::move(ins.members);
    return dlg;
}

bool is_acyclic(const DirectedLineGraph& dlg) {
    const std::size_t m = dlg.node_count();
    std::vector<std::uint32_t> indegree(m, 0);
    for (EdgeIndex x = 0; x < m; ++x)
        for (EdgeIndex y : dlg.successors(x)) ++indegree[y];

    std::vector<EdgeIndex> queue;
    queue.reserve(m);
    for (EdgeIndex x = 0; x < m; ++x)
        if (indegree[x] == 0) queue.push_back(x);

    std::size_t peeled = 0;
    while (!queue.empty()) {
        const EdgeIndex x = queue.back();
        queue.pop_back();
        ++peeled;
        for (EdgeIndex y : dlg.successors(x))
            if (--indegree[y] == 0) queue.push_back(y);
    }
    return peeled == m;
}

std::string to_dot(const DirectedLineGraph& dlg, const TemporalGraph& g) {
    std::ostringstream out;
    out << "digraph dlg {\n";
    for (EdgeIndex e = 0; e < dlg.node_count(); ++e) {
        const TemporalEdge& edge = g.edges[e];
        out << "  e" << e << " [label=\"n^" << edge.t << "_{" << g.labels[edge.src] << ","
            << g.labels[edge.dst] << "}\"];\n";
    }
    for (EdgeIndex e = 0; e < dlg.node_count(); ++e) {
        const auto succ = dlg.successors(e);
        const auto w = dlg.weights(e);
        for (std::size_t i = 0; i < succ.size(); ++i)
            out << "  e" << e << " -> e" << succ[i] << " [label=\"" << w[i] << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace twc
