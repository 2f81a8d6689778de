#include "twc/centrality.hpp"

#include <algorithm>
#include <atomic>

#include "twc/errors.hpp"
#include "twc/parallel.hpp"

namespace twc {

namespace {

CentralityResult make_result(CentralityMode mode, std::vector<double> scores) {
    CentralityResult r;
    r.mode = mode;
    r.scores = std::move(scores);
    r.nodes.resize(r.scores.size());
    for (std::size_t v = 0; v < r.nodes.size(); ++v) r.nodes[v] = static_cast<NodeId>(v);
    r.ranking = r.nodes;
    std::sort(r.ranking.begin(), r.ranking.end(), [&](NodeId a, NodeId b) {
        return r.scores[a] != r.scores[b] ? r.scores[a] > r.scores[b] : a < b;
    });
    return r;
}

void check_compatible(const WalkWeightMatrix& win, const WalkWeightMatrix& wout) {
    if (win.node_count() != wout.node_count())
        throw ContractViolation("walk matrices cover different node counts");
    if (win.direction() != WalkDirection::incoming || wout.direction() != WalkDirection::outgoing)
        throw ContractViolation("combine expects an incoming and an outgoing matrix");
}

} // namespace

std::vector<std::uint32_t> CentralityResult::competition_ranks() const {
    std::vector<std::uint32_t> ranks(ranking.size());
    auto score_of = [&](NodeId v) {
        const auto it = std::lower_bound(nodes.begin(), nodes.end(), v);
        return scores[static_cast<std::size_t>(it - nodes.begin())];
    };
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        if (i > 0 && score_of(ranking[i]) == score_of(ranking[i - 1]))
            ranks[i] = ranks[i - 1];
        else
            ranks[i] = static_cast<std::uint32_t>(i + 1);
    }
    return ranks;
}

CentralityResult combine_fast(const WalkWeightMatrix& win, const WalkWeightMatrix& wout,
                              CombineStats* stats, int threads) {
    check_compatible(win, wout);
    const std::size_t n = win.node_count();
    std::vector<double> scores(n, 0.0);
    std::atomic<std::uint64_t> touched{0};

    parallel_ranges(n, threads, [&](std::size_t begin, std::size_t end) {
        std::uint64_t local_touched = 0;
        for (std::size_t v = begin; v < end; ++v) {
            const auto in = win.entries(static_cast<NodeId>(v));
            const auto out = wout.entries(static_cast<NodeId>(v));
            double c = 0.0, in_sum = 0.0;
            std::size_t i = 0, o = 0;
            // Merged ascending sweep over both key sets; an incoming entry at
            // time t is folded into the prefix before an outgoing entry at the
            // same t is consumed (t1 = t2 pairs count).
            while (i < in.size() || o < out.size()) {
                const bool take_in =
                    i < in.size() && (o >= out.size() || in[i].time <= out[o].time);
                if (take_in) {
                    in_sum += in[i].weight;
                    ++i;
                    ++local_touched;
                } else {
                    c += out[o].weight * in_sum;
                    ++o;
                    ++local_touched;
                }
            }
            scores[v] = c;
        }
        touched.fetch_add(local_touched, std::memory_order_relaxed);
    });

    if (stats) stats->entries_touched = touched.load();
    return make_result(CentralityMode::twc, std::move(scores));
}

CentralityResult combine_general(const WalkWeightMatrix& win, const WalkWeightMatrix& wout,
                                 const WeightFunction& phi_m, CombineStats* stats, int threads) {
    check_compatible(win, wout);
    const std::size_t n = win.node_count();
    std::vector<double> scores(n, 0.0);
    std::atomic<std::uint64_t> evals{0};

    parallel_ranges(n, threads, [&](std::size_t begin, std::size_t end) {
        std::uint64_t local_evals = 0;
        for (std::size_t v = begin; v < end; ++v) {
            const auto in = win.entries(static_cast<NodeId>(v));
            const auto out = wout.entries(static_cast<NodeId>(v));
            double c = 0.0;
            for (const auto& oe : out) {
                double pair_sum = 0.0;
                for (const auto& ie : in) {
                    if (ie.time > oe.time) break;
                    pair_sum += ie.weight * phi_m(ie.time, oe.time);
                    ++local_evals;
                }
                c += oe.weight * pair_sum;
            }
            scores[v] = c;
        }
        evals.fetch_add(local_evals, std::memory_order_relaxed);
    });

    if (stats) stats->phi_m_evaluations = evals.load();
    return make_result(CentralityMode::twc, std::move(scores));
}

CentralityResult katz_mode(const WalkWeightMatrix& wout) {
    if (wout.direction() != WalkDirection::outgoing)
        throw ContractViolation("katz mode expects an outgoing matrix");
    std::vector<double> scores(wout.node_count(), 0.0);
    for (std::size_t v = 0; v < scores.size(); ++v)
        scores[v] = wout.node_total(static_cast<NodeId>(v));
    return make_result(CentralityMode::katz, std::move(scores));
}

CentralityResult degree_mode(const TemporalGraph& g, WalkDirection direction) {
    std::vector<double> scores(g.node_count(), 0.0);
    for (const TemporalEdge& e : g.edges)
        scores[direction == WalkDirection::outgoing ? e.src : e.dst] += 1.0;
    return make_result(
        direction == WalkDirection::outgoing ? CentralityMode::degree_out : CentralityMode::degree_in,
        std::move(scores));
}

} // namespace twc
