#pragma once

#include <span>

#include "twc/temporal_graph.hpp"
#include "twc/types.hpp"

namespace twc {

/// Time-dependent weight function Phi(t1, t2), defined for t1 <= t2.
/// Four kinds ship:
///   constant_alpha(a)  -> a                  (exponential decay in length)
///   inverse_waiting    -> 1 / (1 + t2 - t1)  (decay in waiting time)
///   combined(a)        -> a / (1 + t2 - t1)
///   one                -> 1
class WeightFunction {
public:
    enum class Kind { constant_alpha, inverse_waiting, combined, one };

    static WeightFunction constant_alpha(double alpha);
    static WeightFunction inverse_waiting() { return WeightFunction(Kind::inverse_waiting, 0.0); }
    static WeightFunction combined(double alpha);
    static WeightFunction one() { return WeightFunction(Kind::one, 0.0); }

    /// Evaluates Phi(t1, t2). Requires t1 <= t2; the value is strictly positive.
    double operator()(Time t1, Time t2) const;

    Kind kind() const { return kind_; }
    double alpha() const { return alpha_; }

    bool operator==(const WeightFunction&) const = default;

private:
    WeightFunction(Kind kind, double alpha) : kind_(kind), alpha_(alpha) {}

    Kind kind_;
    double alpha_;
};

/// Weight of a temporal walk: the product of f(t_i + delta, t_{i+1}) over the
/// internal transitions. Walks of length zero or one weigh 1. The walk must
/// be node-continuous and satisfy t_i + delta <= t_{i+1}.
double walk_weight(const WeightFunction& f, std::span<const TemporalEdge> walk, Time delta);

/// Weight functions for incoming walks, outgoing walks, and the pair
/// combination step. The two walk directions may be weighted independently.
struct WeightConfig {
    WeightFunction phi_in = WeightFunction::one();
    WeightFunction phi_out = WeightFunction::one();
    WeightFunction phi_m = WeightFunction::one();
};

} // namespace twc
