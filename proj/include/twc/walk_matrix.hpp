#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "twc/types.hpp"

namespace twc {

enum class WalkDirection { incoming, outgoing };

/// Sparse per-node map time -> accumulated walk weight. Incoming rows are
/// keyed by arrival times (t + delta), outgoing rows by starting times.
/// Rows keep their keys in ascending order; absent keys mean weight zero,
/// and every stored weight is strictly positive.
class WalkWeightMatrix {
public:
    struct Entry {
        Time time;
        double weight;

        bool operator==(const Entry&) const = default;
    };

    WalkWeightMatrix(WalkDirection direction, std::size_t node_count)
        : direction_(direction), rows_(node_count) {}

    WalkDirection direction() const { return direction_; }
    std::size_t node_count() const { return rows_.size(); }

    std::span<const Entry> entries(NodeId v) const { return rows_[v]; }

    /// Weight at (v, t); zero when the key is absent.
    double value(NodeId v, Time t) const;

    /// Sum of all weights stored for v: the total weighted count of non-empty
    /// walks ending (incoming) or starting (outgoing) at v.
    double node_total(NodeId v) const;

    std::size_t total_entries() const;

    /// Appends (t, w) to v's row. Keys must arrive in non-decreasing order
    /// per row; an equal key accumulates into the existing tail entry.
    void append_ascending(NodeId v, Time t, double w);

    /// Replaces v's row; entries must be sorted ascending with distinct keys.
    void set_row(NodeId v, std::vector<Entry> row);

private:
    WalkDirection direction_;
    std::vector<std::vector<Entry>> rows_;
};

} // namespace twc
