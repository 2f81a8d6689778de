#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twc/types.hpp"

namespace twc {

// Directed temporal edge (u, v, t). Self-loops are excluded by construction.
struct TemporalEdge {
    NodeId src = 0;
    NodeId dst = 0;
    Time t = 0;

    bool operator==(const TemporalEdge&) const = default;
};

// Immutable after construction: edges sorted non-decreasing by t (stable
// w.r.t. input order), labels[i] is the original label of node i.
struct TemporalGraph {
    std::vector<std::string> labels;
    std::vector<TemporalEdge> edges;
    Time delta = 1;
    std::uint64_t self_loops_dropped = 0;

    std::size_t node_count() const { return labels.size(); }
    std::size_t edge_count() const { return edges.size(); }
};

struct GraphStats {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t time_support = 0;   // |{t} U {t + delta}| over all edges
    std::size_t tau_in_max = 0;     // max distinct arrival times at a node
    std::size_t tau_out_max = 0;    // max distinct starting times at a node
};

struct IngestOptions {
    bool undirected = false;
    Time delta = 1;
    std::optional<std::pair<Time, Time>> interval; // keep a <= t and t + delta <= b
};

/// Parses a whitespace-separated `src dst t` edge list. Lines starting with
/// '#' and blank lines are skipped; self-loop lines are dropped and counted.
/// With `undirected` every line yields a forward and a backward edge with
/// equal time stamps. Node ids are assigned in first-appearance order of the
/// retained edges.
TemporalGraph ingest(std::istream& source, const IngestOptions& options);

/// ingest() on the named file. Throws InputError when the file cannot be read.
TemporalGraph ingest_file(const std::string& path, const IngestOptions& options);

/// Programmatic construction: validates edges (no self-loops, t >= 0, no
/// arrival overflow) and sorts them stably by time.
TemporalGraph from_edges(std::size_t node_count, Time delta, std::vector<TemporalEdge> edges);

GraphStats stats(const TemporalGraph& g);

} // namespace twc
