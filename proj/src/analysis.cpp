#include "twc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "twc/errors.hpp"

namespace twc {

namespace {

// Pairs (i, j), i < j, with values[i] > values[j] strictly, by merge sort.
std::uint64_t count_inversions(std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<double> buffer(n);
    std::uint64_t inversions = 0;
    for (std::size_t width = 1; width < n; width *= 2) {
        for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
            const std::size_t mid = lo + width;
            const std::size_t hi = std::min(n, mid + width);
            std::size_t i = lo, j = mid, k = lo;
            while (i < mid && j < hi) {
                if (values[j] < values[i]) { // strict: equal keys are not inverted
                    inversions += mid - i;
                    buffer[k++] = values[j++];
                } else {
                    buffer[k++] = values[i++];
                }
            }
            while (i < mid) buffer[k++] = values[i++];
            while (j < hi) buffer[k++] = values[j++];
            std::copy(buffer.begin() + lo, buffer.begin() + hi, values.begin() + lo);
        }
    }
    return inversions;
}

std::uint64_t tied_pairs(std::vector<double> sorted) {
    std::uint64_t pairs = 0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const std::uint64_t g = j - i;
        pairs += g * (g - 1) / 2;
        i = j;
    }
    return pairs;
}

} // namespace

RankCorrelation kendall_tau(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw ContractViolation("score vectors differ in length");
    const std::uint64_t n = a.size();
    RankCorrelation rc;
    rc.n_pairs = n * (n - 1) / 2;
    if (n < 2) {
        rc.tau = 0.0; // no pairs: undefined, reported as 0
        return rc;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a[i] != a[j] ? a[i] < a[j] : b[i] < b[j];
    });

    // Ties in a, in b, and jointly, plus discordances as b-inversions after
    // sorting by (a, b).
    std::uint64_t ties_a = 0, ties_joint = 0;
    {
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            while (j < n && a[order[j]] == a[order[i]]) ++j;
            const std::uint64_t g = j - i;
            ties_a += g * (g - 1) / 2;
            std::size_t p = i;
            while (p < j) {
                std::size_t q = p;
                while (q < j && b[order[q]] == b[order[p]]) ++q;
                const std::uint64_t gj = q - p;
                ties_joint += gj * (gj - 1) / 2;
                p = q;
            }
            i = j;
        }
    }
    std::vector<double> b_sorted(n);
    for (std::size_t i = 0; i < n; ++i) b_sorted[i] = b[order[i]];
    const std::uint64_t discordant = count_inversions(b_sorted);
    // b_sorted is now sorted; reuse it for the b tie count.
    const std::uint64_t ties_b = tied_pairs(std::move(b_sorted));

    const double total = static_cast<double>(rc.n_pairs);
    const double con_minus_dis = total - static_cast<double>(ties_a) - static_cast<double>(ties_b) +
                                 static_cast<double>(ties_joint) -
                                 2.0 * static_cast<double>(discordant);
    const double denom =
        std::sqrt((total - static_cast<double>(ties_a)) * (total - static_cast<double>(ties_b)));
    rc.tau = denom > 0.0 ? con_minus_dis / denom : 0.0;
    return rc;
}

RankCorrelation kendall_tau(const CentralityResult& a, const CentralityResult& b) {
    if (a.nodes != b.nodes)
        throw ContractViolation("rank correlation requires identical node universes");
    return kendall_tau(std::span<const double>(a.scores), std::span<const double>(b.scores));
}

ErrorReport mean_relative_error(const CentralityResult& exact, const CentralityResult& approx) {
    if (exact.nodes != approx.nodes)
        throw ContractViolation("error report requires identical node universes");
    ErrorReport report;
    double sum = 0.0;
    for (std::size_t i = 0; i < exact.scores.size(); ++i) {
        if (exact.scores[i] == 0.0) continue;
        sum += std::abs(exact.scores[i] - approx.scores[i]) / std::abs(exact.scores[i]);
        ++report.support;
    }
    if (report.support == 0) {
        report.empty_support = true;
        return report;
    }
    report.mean_relative_error = sum / static_cast<double>(report.support);
    return report;
}

CentralityResult top_k(const CentralityResult& result, double fraction) {
    if (!(fraction > 0.0 && fraction <= 1.0))
        throw ContractViolation("fraction must lie in (0, 1]");
    const std::size_t n = result.size();
    const std::size_t k =
        std::min(n, static_cast<std::size_t>(std::ceil(static_cast<double>(n) * fraction)));

    CentralityResult restricted;
    restricted.mode = result.mode;
    restricted.ranking.assign(result.ranking.begin(), result.ranking.begin() + k);
    restricted.nodes = restricted.ranking;
    std::sort(restricted.nodes.begin(), restricted.nodes.end());
    restricted.scores.reserve(k);
    for (NodeId v : restricted.nodes) {
        const auto it = std::lower_bound(result.nodes.begin(), result.nodes.end(), v);
        restricted.scores.push_back(result.scores[static_cast<std::size_t>(it - result.nodes.begin())]);
    }
    return restricted;
}

} // namespace twc
