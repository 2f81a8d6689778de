#include <doctest.h>

#include <algorithm>

#include "test_support.hpp"
#include "twc/errors.hpp"
#include "twc/oracle.hpp"
#include "twc/stream_walk.hpp"

using namespace twc;
using namespace twc::testing;

TEST_CASE("incoming walk weights on the running example") {
    const TemporalGraph g = fig1_graph();
    const auto [w, iterations] = compute_incoming(g, WeightFunction::one());

    const NodeId e = node_by_label(g, "e");
    const NodeId c = node_by_label(g, "c");
    // Frozen from exhaustive enumeration: three walks arrive at e at time 5,
    // two at c at time 4.
    CHECK(w.value(e, 5) == 3.0);
    CHECK(w.value(e, 4) == 2.0);
    CHECK(w.value(c, 4) == 2.0);
    CHECK(w.value(c, 3) == 1.0);
    CHECK(w.entries(node_by_label(g, "a")).empty());
}

TEST_CASE("outgoing walk weights on the running example") {
    const TemporalGraph g = fig1_graph();
    const auto [w, iterations] = compute_outgoing(g, WeightFunction::one());

    CHECK(w.value(node_by_label(g, "c"), 3) == 7.0);
    CHECK(w.value(node_by_label(g, "e"), 5) == 2.0); // (f,g,2) is out of reach in time
    CHECK(w.value(node_by_label(g, "a"), 1) == 2.0);
    CHECK(w.value(node_by_label(g, "a"), 2) == 8.0);
    CHECK(w.entries(node_by_label(g, "g")).empty());
}

TEST_CASE("a single edge yields a single unit entry in each direction") {
    const TemporalGraph g = from_edges(2, 1, {{0, 1, 3}});
    const auto in = compute_incoming(g, WeightFunction::one()).matrix;
    const auto out = compute_outgoing(g, WeightFunction::one()).matrix;
    CHECK(in.total_entries() == 1);
    CHECK(in.value(1, 4) == 1.0);
    CHECK(out.total_entries() == 1);
    CHECK(out.value(0, 3) == 1.0);
}

TEST_CASE("delta = 0 is rejected by both passes") {
    const TemporalGraph g = from_edges(2, 0, {{0, 1, 3}});
    CHECK_THROWS_AS(compute_incoming(g, WeightFunction::one()), ConfigError);
    CHECK_THROWS_AS(compute_outgoing(g, WeightFunction::one()), ConfigError);
}

TEST_CASE("stream matrices match the enumeration oracle on random graphs") {
    Rng rng(201);
    const WeightFunction phis[] = {WeightFunction::one(), WeightFunction::constant_alpha(0.5),
                                   WeightFunction::inverse_waiting()};
    int checked = 0;
    while (checked < 60) {
        RandomGraphSpec spec;
        spec.max_nodes = 8;
        spec.max_edges = 20;
        spec.delta = 1 + static_cast<Time>(rng.below(2));
        const TemporalGraph g = random_graph(rng, spec);
        if (bounded_walk_count(expand(g, WeightFunction::one()), 25) > 20000) continue;
        ++checked;

        const WalkEnumeration walks = enumerate_walks(g, 25);
        for (const auto& phi : phis) {
            const auto in = compute_incoming(g, phi).matrix;
            const auto out = compute_outgoing(g, phi).matrix;
            const auto oracle_in = oracle_matrix(g, walks, WalkDirection::incoming, phi);
            const auto oracle_out = oracle_matrix(g, walks, WalkDirection::outgoing, phi);
            for (NodeId v = 0; v < g.node_count(); ++v) {
                REQUIRE(in.entries(v).size() == oracle_in.entries(v).size());
                REQUIRE(out.entries(v).size() == oracle_out.entries(v).size());
                for (std::size_t i = 0; i < in.entries(v).size(); ++i) {
                    CHECK(in.entries(v)[i].time == oracle_in.entries(v)[i].time);
                    CHECK(in.entries(v)[i].weight ==
                          doctest::Approx(oracle_in.entries(v)[i].weight).epsilon(1e-9));
                }
                for (std::size_t i = 0; i < out.entries(v).size(); ++i) {
                    CHECK(out.entries(v)[i].time == oracle_out.entries(v)[i].time);
                    CHECK(out.entries(v)[i].weight ==
                          doctest::Approx(oracle_out.entries(v)[i].weight).epsilon(1e-9));
                }
            }
        }
    }
}

TEST_CASE("permuting equal-timestamp edges never changes the matrices") {
    Rng rng(202);
    for (int round = 0; round < 40; ++round) {
        RandomGraphSpec spec;
        spec.max_nodes = 7;
        spec.max_edges = 18;
        spec.max_time = 4; // force many ties
        spec.delta = 1;
        const TemporalGraph g = random_graph(rng, spec);

        // Rotate edges inside each equal-time block.
        std::vector<TemporalEdge> permuted = g.edges;
        std::size_t i = 0;
        while (i < permuted.size()) {
            std::size_t j = i;
            while (j < permuted.size() && permuted[j].t == permuted[i].t) ++j;
            std::rotate(permuted.begin() + i, permuted.begin() + i + (j - i) / 2,
                        permuted.begin() + j);
            i = j;
        }
        const TemporalGraph h = from_edges(g.node_count(), g.delta, std::move(permuted));

        for (const auto direction : {WalkDirection::incoming, WalkDirection::outgoing}) {
            const auto phi = WeightFunction::inverse_waiting();
            const auto a = direction == WalkDirection::incoming ? compute_incoming(g, phi).matrix
                                                                : compute_outgoing(g, phi).matrix;
            const auto b = direction == WalkDirection::incoming ? compute_incoming(h, phi).matrix
                                                                : compute_outgoing(h, phi).matrix;
            for (NodeId v = 0; v < g.node_count(); ++v) {
                REQUIRE(a.entries(v).size() == b.entries(v).size());
                for (std::size_t k = 0; k < a.entries(v).size(); ++k) {
                    CHECK(a.entries(v)[k].time == b.entries(v)[k].time);
                    CHECK(a.entries(v)[k].weight ==
                          doctest::Approx(b.entries(v)[k].weight).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("inner-loop work is bounded by m times tau_max") {
    Rng rng(203);
    for (int round = 0; round < 40; ++round) {
        RandomGraphSpec spec;
        spec.delta = 1 + static_cast<Time>(rng.below(2));
        const TemporalGraph g = random_graph(rng, spec);
        const GraphStats s = stats(g);
        const auto in = compute_incoming(g, WeightFunction::one());
        const auto out = compute_outgoing(g, WeightFunction::one());
        CHECK(in.inner_iterations <= static_cast<std::uint64_t>(s.m) * s.tau_in_max);
        CHECK(out.inner_iterations <= static_cast<std::uint64_t>(s.m) * s.tau_out_max);
    }
}

TEST_CASE("entry sums equal total walk weight ending or starting at the node") {
    Rng rng(204);
    int checked = 0;
    while (checked < 25) {
        RandomGraphSpec spec;
        spec.max_nodes = 7;
        spec.max_edges = 16;
        spec.delta = 1;
        const TemporalGraph g = random_graph(rng, spec);
        if (bounded_walk_count(expand(g, WeightFunction::one()), 25) > 20000) continue;
        ++checked;

        const auto phi = WeightFunction::constant_alpha(0.5);
        const auto in = compute_incoming(g, phi).matrix;
        const WalkEnumeration walks = enumerate_walks(g, 25);
        for (NodeId v = 0; v < g.node_count(); ++v) {
            double expected = 0.0;
            for (const auto& [key, ids] : walks.by_end) {
                if (key.first != v) continue;
                for (std::uint32_t id : ids) {
                    std::vector<TemporalEdge> walk;
                    for (EdgeIndex e : walks.walks[id]) walk.push_back(g.edges[e]);
                    expected += walk_weight(phi, walk, g.delta);
                }
            }
            CHECK(in.node_total(v) == doctest::Approx(expected).epsilon(1e-9));
        }
    }
}
