#include "twc/temporal_graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <unordered_map>

#include "twc/errors.hpp"

namespace twc {

namespace {

constexpr Time kMaxTime = std::numeric_limits<Time>::max();

struct LabelInterner {
    std::unordered_map<std::string, NodeId> index;
    std::vector<std::string> labels;

    NodeId intern(std::string_view label) {
        auto it = index.find(std::string(label));
        if (it != index.end()) return it->second;
        NodeId id = static_cast<NodeId>(labels.size());
        labels.emplace_back(label);
        index.emplace(labels.back(), id);
        return id;
    }
};

// Splits a line into at most 4 whitespace-separated tokens (3 expected).
int tokenize(std::string_view line, std::string_view out[4]) {
    int count = 0;
    std::size_t i = 0;
    while (i < line.size() && count < 4) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out[count++] = line.substr(start, i - start);
    }
    return count;
}

Time parse_time(std::string_view token, std::uint64_t line_no, Time delta) {
    Time value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError("timestamp out of range: '" + std::string(token) + "'", line_no);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError("timestamp is not an integer: '" + std::string(token) + "'", line_no);
    if (value < 0)
        throw ParseError("timestamp must be non-negative: '" + std::string(token) + "'", line_no);
    if (value > kMaxTime - delta)
        throw ParseError("arrival time t + delta overflows the timestamp type", line_no);
    return value;
}

void stable_sort_by_time(std::vector<TemporalEdge>& edges) {
    std::stable_sort(edges.begin(), edges.end(),
                     [](const TemporalEdge& a, const TemporalEdge& b) { return a.t < b.t; });
}

} // namespace

TemporalGraph ingest(std::istream& source, const IngestOptions& options) {
    if (options.delta < 0)
        throw ConfigError("delta must be non-negative");
    if (options.interval && options.interval->first > options.interval->second)
        throw ConfigError("interval lower bound exceeds upper bound");

    LabelInterner interner;
    TemporalGraph g;
    g.delta = options.delta;

    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(source, line)) {
        ++line_no;
        std::string_view tokens[4];
        const int count = tokenize(line, tokens);
        if (count == 0 || tokens[0].front() == '#') continue;
        if (count != 3)
            throw ParseError("expected 'src dst t', got " + std::to_string(count) + " field(s)",
                             line_no);

        const Time t = parse_time(tokens[2], line_no, options.delta);
        if (tokens[0] == tokens[1]) {
            ++g.self_loops_dropped;
            continue;
        }
        if (options.interval &&
            (t < options.interval->first || t + options.delta > options.interval->second))
            continue;

        const NodeId u = interner.intern(tokens[0]);
        const NodeId v = interner.intern(tokens[1]);
        g.edges.push_back({u, v, t});
        if (options.undirected) g.edges.push_back({v, u, t});
    }

    g.labels = std::move(interner.labels);
    stable_sort_by_time(g.edges);
    return g;
}

TemporalGraph ingest_file(const std::string& path, const IngestOptions& options) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    return ingest(in, options);
}

TemporalGraph from_edges(std::size_t node_count, Time delta, std::vector<TemporalEdge> edges) {
    if (delta < 0) throw ConfigError("delta must be non-negative");
    for (const TemporalEdge& e : edges) {
        if (e.src == e.dst)
            throw ContractViolation("self-loop edge is not a valid temporal edge");
        if (e.src >= node_count || e.dst >= node_count)
            throw ContractViolation("edge endpoint out of range");
        if (e.t < 0 || e.t > kMaxTime - delta)
            throw ContractViolation("timestamp negative or arrival time overflows");
    }
    TemporalGraph g;
    g.delta = delta;
    g.edges = std::move(edges);
    g.labels.reserve(node_count);
    for (std::size_t v = 0; v < node_count; ++v) g.labels.push_back(std::to_string(v));
    stable_sort_by_time(g.edges);
    return g;
}

GraphStats stats(const TemporalGraph& g) {
    GraphStats s;
    s.n = g.node_count();
    s.m = g.edge_count();

    std::vector<Time> support;
    support.reserve(2 * g.edges.size());
    std::vector<std::vector<Time>> in_times(s.n), out_times(s.n);
    for (const TemporalEdge& e : g.edges) {
        support.push_back(e.t);
        support.push_back(e.t + g.delta);
        out_times[e.src].push_back(e.t);
        in_times[e.dst].push_back(e.t + g.delta);
    }
    std::sort(support.begin(), support.end());
    s.time_support =
        static_cast<std::size_t>(std::unique(support.begin(), support.end()) - support.begin());

    auto distinct = [](std::vector<Time>& v) {
        std::sort(v.begin(), v.end());
        return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
    };
    for (std::size_t v = 0; v < s.n; ++v) {
        s.tau_in_max = std::max(s.tau_in_max, distinct(in_times[v]));
        s.tau_out_max = std::max(s.tau_out_max, distinct(out_times[v]));
    }
    return s;
}

} // namespace twc
