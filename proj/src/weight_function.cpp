#include "twc/weight_function.hpp"

#include "twc/errors.hpp"

namespace twc {

WeightFunction WeightFunction::constant_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ConfigError("alpha must lie in (0, 1)");
    return WeightFunction(Kind::constant_alpha, alpha);
}

WeightFunction WeightFunction::combined(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ConfigError("alpha must lie in (0, 1)");
    return WeightFunction(Kind::combined, alpha);
}

double WeightFunction::operator()(Time t1, Time t2) const {
    if (t1 > t2) throw ContractViolation("weight function requires t1 <= t2");
    switch (kind_) {
        case Kind::constant_alpha: return alpha_;
        case Kind::inverse_waiting: return 1.0 / static_cast<double>(1 + (t2 - t1));
        case Kind::combined: return alpha_ / static_cast<double>(1 + (t2 - t1));
        case Kind::one: return 1.0;
    }
    throw ContractViolation("unknown weight function kind");
}

double walk_weight(const WeightFunction& f, std::span<const TemporalEdge> walk, Time delta) {
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        if (walk[i].dst != walk[i + 1].src)
            throw ContractViolation("walk is not node-continuous");
        if (walk[i].t + delta > walk[i + 1].t)
            throw ContractViolation("walk violates the transition time constraint");
    }
    double w = 1.0;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        w *= f(walk[i].t + delta, walk[i + 1].t);
    return w;
}

} // namespace twc
