#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "test_support.hpp"
#include "twc/line_graph.hpp"
#include "twc/oracle.hpp"

using namespace twc;
using namespace twc::testing;

namespace {

std::string dlg_node_name(const TemporalGraph& g, EdgeIndex e) {
    const TemporalEdge& edge = g.edges[e];
    return "n" + std::to_string(edge.t) + "_" + g.labels[edge.src] + g.labels[edge.dst];
}

std::set<std::pair<std::string, std::string>> arc_names(const TemporalGraph& g,
                                                        const DirectedLineGraph& dlg) {
    std::set<std::pair<std::string, std::string>> arcs;
    for (EdgeIndex x = 0; x < dlg.node_count(); ++x)
        for (EdgeIndex y : dlg.successors(x)) arcs.insert({dlg_node_name(g, x), dlg_node_name(g, y)});
    return arcs;
}

} // namespace

TEST_CASE("expansion of the running example matches the reference arc set") {
    const TemporalGraph g = fig1_graph();
    const DirectedLineGraph dlg = expand(g, WeightFunction::one());
    CHECK(dlg.node_count() == 9);
    CHECK(dlg.arc_count() == 8);
    CHECK(is_acyclic(dlg));

    const std::set<std::pair<std::string, std::string>> expected{
        {"n1_ab", "n3_bc"}, {"n2_ac", "n3_cd"}, {"n2_ac", "n3_ce"}, {"n3_cd", "n4_de"},
        {"n4_de", "n5_ef"}, {"n4_de", "n5_eg"}, {"n3_ce", "n5_ef"}, {"n3_ce", "n5_eg"}};
    CHECK(arc_names(g, dlg) == expected);
}

TEST_CASE("a single temporal edge expands to one isolated node") {
    const TemporalGraph g = from_edges(2, 1, {{0, 1, 4}});
    const DirectedLineGraph dlg = expand(g, WeightFunction::one());
    CHECK(dlg.node_count() == 1);
    CHECK(dlg.arc_count() == 0);
    CHECK(is_acyclic(dlg));
}

TEST_CASE("delta = 0 admits equal-time continuation") {
    const TemporalGraph g = from_edges(3, 0, {{0, 1, 1}, {1, 2, 1}});
    const DirectedLineGraph dlg = expand(g, WeightFunction::one());
    CHECK(dlg.arc_count() == 1); // 1 + 0 <= 1
}

TEST_CASE("mutual edges with delta = 0 form a cycle") {
    const TemporalGraph g = from_edges(2, 0, {{0, 1, 1}, {1, 0, 1}});
    const DirectedLineGraph dlg = expand(g, WeightFunction::one());
    CHECK(dlg.arc_count() == 2);
    CHECK_FALSE(is_acyclic(dlg));
}

TEST_CASE("the empty expansion is acyclic") {
    const TemporalGraph g;
    CHECK(is_acyclic(expand(g, WeightFunction::one())));
}

TEST_CASE("expansion is acyclic whenever delta > 0") {
    Rng rng(301);
    for (int round = 0; round < 50; ++round) {
        RandomGraphSpec spec;
        spec.delta = 1 + static_cast<Time>(rng.below(3));
        const TemporalGraph g = random_graph(rng, spec);
        CHECK(is_acyclic(expand(g, WeightFunction::one())));
    }
}

TEST_CASE("walks of length l-1 in the expansion are temporal walks of length l") {
    Rng rng(302);
    int checked = 0;
    while (checked < 30) {
        RandomGraphSpec spec;
        spec.max_nodes = 7;
        spec.max_edges = 14;
        spec.max_time = 8;
        spec.delta = 1;
        const TemporalGraph g = random_graph(rng, spec);
        const DirectedLineGraph dlg = expand(g, WeightFunction::one());
        if (bounded_walk_count(dlg, 5) > 5000) continue;
        ++checked;

        const auto dlg_walks = enumerate_dlg_walks(dlg, 4);
        const WalkEnumeration temporal = enumerate_walks(g, 5);
        for (std::size_t l = 1; l <= 5; ++l) {
            const auto static_count = std::count_if(
                dlg_walks.begin(), dlg_walks.end(),
                [&](const auto& w) { return w.size() == l; }); // l nodes = l-1 arcs
            const auto temporal_count =
                std::count_if(temporal.walks.begin(), temporal.walks.end(),
                              [&](const auto& w) { return w.size() == l; });
            CHECK(static_count == temporal_count);
        }
    }
}

TEST_CASE("arc weight products equal the temporal walk weights") {
    Rng rng(303);
    int checked = 0;
    while (checked < 20) {
        RandomGraphSpec spec;
        spec.max_nodes = 6;
        spec.max_edges = 12;
        spec.delta = 1;
        const TemporalGraph g = random_graph(rng, spec);
        const WeightFunction phi = WeightFunction::inverse_waiting();
        const DirectedLineGraph dlg = expand(g, phi);
        if (bounded_walk_count(dlg, 5) > 3000) continue;
        ++checked;

        for (const auto& walk : enumerate_dlg_walks(dlg, 4)) {
            double product = 1.0;
            for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
                const auto succ = dlg.successors(walk[i]);
                const auto it = std::find(succ.begin(), succ.end(), walk[i + 1]);
                REQUIRE(it != succ.end());
                product *= dlg.weights(walk[i])[static_cast<std::size_t>(it - succ.begin())];
            }
            std::vector<TemporalEdge> temporal;
            for (EdgeIndex e : walk) temporal.push_back(g.edges[e]);
            CHECK(product == doctest::Approx(walk_weight(phi, temporal, g.delta)).epsilon(1e-12));
        }
    }
}

TEST_CASE("the bucket maps partition the expansion's nodes") {
    Rng rng(304);
    for (int round = 0; round < 30; ++round) {
        RandomGraphSpec spec;
        spec.delta = static_cast<Time>(rng.below(2));
        const TemporalGraph g = random_graph(rng, spec);
        const DirectedLineGraph dlg = expand(g, WeightFunction::one());

        for (const bool outgoing : {true, false}) {
            std::vector<int> seen(dlg.node_count(), 0);
            const auto& buckets = outgoing ? dlg.out_buckets() : dlg.in_buckets();
            for (const auto& bucket : buckets) {
                const auto members =
                    outgoing ? dlg.out_members(bucket) : dlg.in_members(bucket);
                for (EdgeIndex x : members) {
                    ++seen[x];
                    const TemporalEdge& e = g.edges[x];
                    if (outgoing) {
                        CHECK(e.src == bucket.node);
                        CHECK(e.t == bucket.time);
                    } else {
                        CHECK(e.dst == bucket.node);
                        CHECK(e.t + g.delta == bucket.time);
                    }
                }
            }
            CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
        }
    }
}

TEST_CASE("arc count meets the degree-product formula when all stamps collide") {
    Rng rng(305);
    for (int round = 0; round < 20; ++round) {
        RandomGraphSpec spec;
        spec.max_time = 0; // all edges at time 0
        spec.delta = 0;
        const TemporalGraph g = random_graph(rng, spec);
        const DirectedLineGraph dlg = expand(g, WeightFunction::one());

        std::vector<std::size_t> in_deg(g.node_count(), 0), out_deg(g.node_count(), 0);
        for (const TemporalEdge& e : g.edges) {
            ++out_deg[e.src];
            ++in_deg[e.dst];
        }
        std::size_t expected = 0;
        for (NodeId v = 0; v < g.node_count(); ++v) expected += in_deg[v] * out_deg[v];
        CHECK(dlg.arc_count() == expected);
    }
}

TEST_CASE("arc count never exceeds the degree-product bound") {
    Rng rng(306);
    for (int round = 0; round < 30; ++round) {
        RandomGraphSpec spec;
        spec.delta = static_cast<Time>(rng.below(3));
        const TemporalGraph g = random_graph(rng, spec);
        const DirectedLineGraph dlg = expand(g, WeightFunction::one());
        std::vector<std::size_t> in_deg(g.node_count(), 0), out_deg(g.node_count(), 0);
        for (const TemporalEdge& e : g.edges) {
            ++out_deg[e.src];
            ++in_deg[e.dst];
        }
        std::size_t bound = 0;
        for (NodeId v = 0; v < g.node_count(); ++v) bound += in_deg[v] * out_deg[v];
        CHECK(dlg.arc_count() <= bound);
    }
}

TEST_CASE("dot export names nodes by time and endpoint labels") {
    const TemporalGraph g = fig1_graph();
    const std::string dot = to_dot(expand(g, WeightFunction::one()), g);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("n^3_{c,d}") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
}
