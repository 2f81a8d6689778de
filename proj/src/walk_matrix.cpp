#include "twc/walk_matrix.hpp"

#include <algorithm>

#include "twc/errors.hpp"

namespace twc {

double WalkWeightMatrix::value(NodeId v, Time t) const {
    const auto& row = rows_[v];
    auto it = std::lower_bound(row.begin(), row.end(), t,
                               [](const Entry& e, Time key) { return e.time < key; });
    return (it != row.end() && it->time == t) ? it->weight : 0.0;
}

double WalkWeightMatrix::node_total(NodeId v) const {
    double sum = 0.0;
    for (const Entry& e : rows_[v]) sum += e.weight;
    return sum;
}

std::size_t WalkWeightMatrix::total_entries() const {
    std::size_t n = 0;
    for (const auto& row : rows_) n += row.size();
    return n;
}

void WalkWeightMatrix::append_ascending(NodeId v, Time t, double w) {
    auto& row = rows_[v];
    if (!row.empty()) {
        if (t < row.back().time)
            throw ContractViolation("row keys must be appended in non-decreasing order");
        if (t == row.back().time) {
            row.back().weight += w;
            return;
        }
    }
    row.push_back({t, w});
}

void WalkWeightMatrix::set_row(NodeId v, std::vector<Entry> row) {
    for (std::size_t i = 0; i + 1 < row.size(); ++i)
        if (row[i].time >= row[i + 1].time)
            throw ContractViolation("row keys must be strictly ascending");
    rows_[v] = std::move(row);
}

} // namespace twc
