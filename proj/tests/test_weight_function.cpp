#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "twc/errors.hpp"
#include "twc/weight_function.hpp"

using namespace twc;
using namespace twc::testing;

TEST_CASE("weight function kinds evaluate per their definition") {
    CHECK(WeightFunction::constant_alpha(0.5)(3, 7) == 0.5);
    CHECK(WeightFunction::inverse_waiting()(4, 4) == 1.0);
    CHECK(WeightFunction::inverse_waiting()(4, 6) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(WeightFunction::combined(0.5)(4, 6) == doctest::Approx(0.5 / 3.0).epsilon(1e-15));
    CHECK(WeightFunction::one()(0, 1000) == 1.0);
}

TEST_CASE("weight function rejects t1 > t2 and bad alpha") {
    CHECK_THROWS_AS(WeightFunction::one()(5, 4), ContractViolation);
    CHECK_THROWS_AS(WeightFunction::constant_alpha(0.0), ConfigError);
    CHECK_THROWS_AS(WeightFunction::constant_alpha(1.0), ConfigError);
    CHECK_THROWS_AS(WeightFunction::combined(1.5), ConfigError);
}

TEST_CASE("walk weight of short walks is one") {
    const TemporalGraph g = fig1_graph();
    CHECK(walk_weight(WeightFunction::inverse_waiting(), {}, 1) == 1.0);
    CHECK(walk_weight(WeightFunction::constant_alpha(0.3),
                      std::span<const TemporalEdge>(g.edges.data(), 1), 1) == 1.0);
}

TEST_CASE("walk weight of a two-edge walk") {
    // (a,b,1)(b,c,3) with delta 1: one internal transition Phi(2, 3).
    const std::vector<TemporalEdge> walk{{0, 1, 1}, {1, 2, 3}};
    CHECK(walk_weight(WeightFunction::constant_alpha(0.25), walk, 1) == 0.25);
    CHECK(walk_weight(WeightFunction::inverse_waiting(), walk, 1) == 0.5);
}

TEST_CASE("walk weight rejects invalid walks") {
    const std::vector<TemporalEdge> broken_chain{{0, 1, 1}, {2, 3, 5}};
    CHECK_THROWS_AS(walk_weight(WeightFunction::one(), broken_chain, 1), ContractViolation);
    const std::vector<TemporalEdge> too_early{{0, 1, 3}, {1, 2, 3}};
    CHECK_THROWS_AS(walk_weight(WeightFunction::one(), too_early, 1), ContractViolation);
}

namespace {

// Random valid temporal walk over a fresh chain of nodes.
std::vector<TemporalEdge> random_walk(Rng& rng, std::size_t length, Time delta) {
    std::vector<TemporalEdge> walk;
    Time t = rng.between(0, 5);
    for (std::size_t i = 0; i < length; ++i) {
        walk.push_back({static_cast<NodeId>(i), static_cast<NodeId>(i + 1), t});
        t += delta + rng.between(0, 4);
    }
    return walk;
}

} // namespace

TEST_CASE("constant alpha weights are alpha^(length-1)") {
    Rng rng(101);
    for (int round = 0; round < 50; ++round) {
        const std::size_t length = 1 + rng.below(7);
        const Time delta = rng.between(0, 2);
        const auto walk = random_walk(rng, length, delta);
        const double alpha = 0.05 + 0.9 * rng.unit();
        const double expected = std::pow(alpha, static_cast<double>(length - 1));
        CHECK(walk_weight(WeightFunction::constant_alpha(alpha), walk, delta) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("walk weights lie in (0, 1] for every kind") {
    Rng rng(102);
    const WeightFunction kinds[] = {WeightFunction::constant_alpha(0.7),
                                    WeightFunction::inverse_waiting(), WeightFunction::combined(0.7),
                                    WeightFunction::one()};
    for (int round = 0; round < 50; ++round) {
        const auto walk = random_walk(rng, 1 + rng.below(6), 1);
        for (const auto& f : kinds) {
            const double w = walk_weight(f, walk, 1);
            CHECK(w > 0.0);
            CHECK(w <= 1.0);
        }
    }
}

TEST_CASE("walk weight is multiplicative under concatenation") {
    Rng rng(103);
    for (int round = 0; round < 30; ++round) {
        const Time delta = 1 + rng.between(0, 1);
        auto left = random_walk(rng, 1 + rng.below(4), delta);
        auto right = random_walk(rng, 1 + rng.below(4), delta);
        // Stitch: shift right's node ids to continue left's chain, and its
        // times to start no earlier than left's arrival.
        const NodeId junction = left.back().dst;
        const Time arrival = left.back().t + delta;
        const Time shift = arrival + rng.between(0, 3) - right.front().t;
        for (auto& e : right) {
            e.src = e.src + junction;
            e.dst = e.dst + junction;
            e.t += shift;
        }

        std::vector<TemporalEdge> joined = left;
        joined.insert(joined.end(), right.begin(), right.end());

        const WeightFunction f = WeightFunction::inverse_waiting();
        const double expected = walk_weight(f, left, delta) * walk_weight(f, right, delta) *
                                f(arrival, right.front().t);
        CHECK(walk_weight(f, joined, delta) == doctest::Approx(expected).epsilon(1e-12));
    }
}
