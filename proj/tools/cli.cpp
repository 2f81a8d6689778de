#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "twc/analysis.hpp"
#include "twc/errors.hpp"
#include "twc/line_graph.hpp"
#include "twc/pipeline.hpp"
#include "twc/result_io.hpp"
#include "twc/temporal_graph.hpp"

namespace twc::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

WeightFunction parse_phi(const std::string& spec) {
    if (spec == "one") return WeightFunction::one();
    if (spec == "time") return WeightFunction::inverse_waiting();
    const auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string family = spec.substr(0, colon);
        const double value = std::stod(spec.substr(colon + 1));
        if (family == "alpha") return WeightFunction::constant_alpha(value);
        if (family == "combined") return WeightFunction::combined(value);
    }
    throw ConfigError("unknown weight function '" + spec +
                      "' (expected alpha:<v> | time | combined:<v> | one)");
}

WeightFunction parse_phi_m(const std::string& spec) {
    if (spec == "one") return WeightFunction::one();
    if (spec == "time") return WeightFunction::inverse_waiting();
    throw ConfigError("unknown pair weight '" + spec + "' (expected one | time)");
}

struct CommonGraphFlags {
    std::string input;
    bool undirected = false;
    Time delta = 1;
    std::vector<Time> interval;

    void attach(CLI::App& app) {
        app.add_option("--input", input, "edge list file (src dst t per line)")->required();
        app.add_flag("--undirected", undirected, "add a reverse edge for every line");
        app.add_option("--delta", delta, "global transition time (default 1)");
        app.add_option("--interval", interval, "restrict to edges with a <= t and t+delta <= b")
            ->expected(2);
    }

    IngestOptions ingest_options() const {
        IngestOptions options;
        options.undirected = undirected;
        options.delta = delta;
        if (!interval.empty()) options.interval = {interval[0], interval[1]};
        return options;
    }
};

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("TWC_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    return 1;
}

json graph_json(const TemporalGraph& g) {
    const GraphStats s = stats(g);
    return json{{"nodes", s.n},
                {"edges", s.m},
                {"time_support", s.time_support},
                {"tau_in_max", s.tau_in_max},
                {"tau_out_max", s.tau_out_max},
                {"self_loops_dropped", g.self_loops_dropped}};
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file: " + path);
    out << content;
}

int run_compute(const CommonGraphFlags& graph_flags, const std::string& phi_spec,
                const std::string& phi_m_spec, const std::string& method_spec,
                const std::string& mode_spec, double epsilon, std::size_t max_length,
                std::size_t dense_cap, int threads_flag, const std::string& output,
                const std::string& summary_path) {
    PipelineOptions options;
    options.weights.phi_in = parse_phi(phi_spec);
    options.weights.phi_out = options.weights.phi_in;
    options.weights.phi_m = parse_phi_m(phi_m_spec);
    options.epsilon = epsilon;
    options.max_length = max_length;
    options.dense_cap = dense_cap;
    options.threads = resolve_threads(threads_flag);

    static const std::map<std::string, Method> methods{{"stream", Method::stream},
                                                       {"exact", Method::exact},
                                                       {"approx", Method::approx},
                                                       {"dag", Method::dag},
                                                       {"oracle", Method::oracle}};
    if (method_spec == "auto") {
        options.method = graph_flags.delta > 0 ? Method::stream : Method::approx;
    } else if (auto it = methods.find(method_spec); it != methods.end()) {
        options.method = it->second;
    } else {
        throw ConfigError("unknown method '" + method_spec + "'");
    }

    static const std::map<std::string, CentralityMode> modes{
        {"twc", CentralityMode::twc},
        {"katz", CentralityMode::katz},
        {"degree-out", CentralityMode::degree_out},
        {"degree-in", CentralityMode::degree_in}};
    if (auto it = modes.find(mode_spec); it != modes.end())
        options.mode = it->second;
    else
        throw ConfigError("unknown mode '" + mode_spec + "'");

    if (options.method == Method::stream && graph_flags.delta == 0)
        throw ConfigError("--method stream requires --delta > 0");
    if (options.mode == CentralityMode::katz &&
        options.weights.phi_out.kind() != WeightFunction::Kind::constant_alpha)
        throw ConfigError("--mode katz requires --phi alpha:<v>");
    if (options.method == Method::oracle && graph_flags.delta == 0 && max_length == 0)
        throw ConfigError("--method oracle with --delta 0 requires --max-length");

    const auto t0 = Clock::now();
    const TemporalGraph g = ingest_file(graph_flags.input, graph_flags.ingest_options());
    const double ingest_seconds = seconds_since(t0);
    if (g.self_loops_dropped > 0)
        std::cerr << "warning: dropped " << g.self_loops_dropped << " self-loop line(s)\n";

    PipelineDiagnostics diag;
    const auto t1 = Clock::now();
    const CentralityResult result = compute_centrality(g, options, &diag);
    const double compute_seconds = seconds_since(t1);

    std::ostringstream tsv;
    write_tsv(tsv, result, g.labels);
    if (output.empty())
        std::cout << tsv.str();
    else
        write_text_file(output, tsv.str());

    json summary{{"command", "compute"},
                 {"input", graph_flags.input},
                 {"options",
                  {{"delta", graph_flags.delta},
                   {"undirected", graph_flags.undirected},
                   {"phi", phi_spec},
                   {"phi_m", phi_m_spec},
                   {"method", method_name(options.method)},
                   {"mode", mode_name(options.mode)},
                   {"epsilon", epsilon},
                   {"threads", options.threads}}},
                 {"graph", graph_json(g)},
                 {"timings",
                  {{"ingest_seconds", ingest_seconds},
                   {"matrices_seconds", diag.seconds_matrices},
                   {"combine_seconds", diag.seconds_combine},
                   {"compute_seconds", compute_seconds}}},
                 {"matrix_entries", diag.matrix_entries}};
    auto convergence_json = [](const ConvergenceReport& r) {
        json c{{"iterations", r.iterations}, {"final_residual", r.final_residual}};
        if (r.spectral_radius_estimate) c["spectral_radius_estimate"] = *r.spectral_radius_estimate;
        return c;
    };
    if (diag.convergence_in) summary["convergence_in"] = convergence_json(*diag.convergence_in);
    if (diag.convergence_out) summary["convergence_out"] = convergence_json(*diag.convergence_out);
    if (options.method == Method::stream)
        summary["stream_inner_iterations"] = {{"incoming", diag.stream_inner_iterations_in},
                                              {"outgoing", diag.stream_inner_iterations_out}};

    std::string where = summary_path;
    if (where.empty() && !output.empty()) where = output + ".json";
    if (!where.empty()) write_text_file(where, summary.dump(2) + "\n");
    return 0;
}

int run_compare(const std::vector<std::string>& files, double top_fraction,
                const std::string& output) {
    if (files.size() < 1) throw ConfigError("compare needs at least one ranking file");

    std::vector<LoadedResult> loaded;
    std::vector<std::string> names;
    for (const auto& path : files) {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open ranking file: " + path);
        loaded.push_back(read_tsv(in));
        const auto slash = path.find_last_of('/');
        names.push_back(slash == std::string::npos ? path : path.substr(slash + 1));
    }

    // Align every result on the first file's sorted label universe.
    std::vector<std::string> universe = loaded.front().labels;
    std::sort(universe.begin(), universe.end());
    std::vector<std::vector<double>> scores(loaded.size());
    for (std::size_t i = 0; i < loaded.size(); ++i) {
        std::map<std::string, double> by_label;
        for (std::size_t r = 0; r < loaded[i].labels.size(); ++r)
            by_label[loaded[i].labels[r]] = loaded[i].scores[r];
        if (by_label.size() != loaded[i].labels.size())
            throw InputError("duplicate node labels in ranking file: " + files[i]);
        if (by_label.size() != universe.size())
            throw InputError("ranking files cover different node universes: " + files[i]);
        scores[i].reserve(universe.size());
        for (const auto& label : universe) {
            const auto it = by_label.find(label);
            if (it == by_label.end())
                throw InputError("ranking files cover different node universes: " + files[i]);
            scores[i].push_back(it->second);
        }
    }

    // Optional top-k restriction: correlate each pair over the union of their
    // top-k node sets.
    auto top_set = [&](std::size_t i) {
        CentralityResult r;
        r.nodes.resize(universe.size());
        for (std::size_t v = 0; v < universe.size(); ++v) r.nodes[v] = static_cast<NodeId>(v);
        r.scores = scores[i];
        r.ranking = r.nodes;
        std::sort(r.ranking.begin(), r.ranking.end(), [&](NodeId a, NodeId b) {
            return r.scores[a] != r.scores[b] ? r.scores[a] > r.scores[b] : a < b;
        });
        const CentralityResult restricted = top_k(r, top_fraction);
        return restricted.nodes;
    };
    std::vector<std::vector<NodeId>> tops;
    if (top_fraction < 1.0)
        for (std::size_t i = 0; i < loaded.size(); ++i) tops.push_back(top_set(i));

    std::vector<std::vector<double>> matrix(loaded.size(),
                                            std::vector<double>(loaded.size(), 0.0));
    for (std::size_t i = 0; i < loaded.size(); ++i) {
        for (std::size_t j = i; j < loaded.size(); ++j) {
            double tau;
            if (top_fraction < 1.0) {
                std::vector<NodeId> subset;
                std::set_union(tops[i].begin(), tops[i].end(), tops[j].begin(), tops[j].end(),
                               std::back_inserter(subset));
                std::vector<double> a, b;
                for (NodeId v : subset) {
                    a.push_back(scores[i][v]);
                    b.push_back(scores[j][v]);
                }
                tau = kendall_tau(std::span<const double>(a), std::span<const double>(b)).tau;
            } else {
                tau = kendall_tau(std::span<const double>(scores[i]),
                                  std::span<const double>(scores[j]))
                          .tau;
            }
            matrix[i][j] = matrix[j][i] = tau;
        }
    }

    std::ostringstream csv;
    write_correlation_csv(csv, names, matrix);
    if (output.empty())
        std::cout << csv.str();
    else
        write_text_file(output, csv.str());
    return 0;
}

int run_stats(const CommonGraphFlags& graph_flags) {
    const TemporalGraph g = ingest_file(graph_flags.input, graph_flags.ingest_options());
    std::cout << graph_json(g).dump(2) << "\n";
    return 0;
}

int run_dlg_export(const CommonGraphFlags& graph_flags, const std::string& phi_spec,
                   const std::string& output) {
    const TemporalGraph g = ingest_file(graph_flags.input, graph_flags.ingest_options());
    const DirectedLineGraph dlg = expand(g, parse_phi(phi_spec));
    const std::string dot = to_dot(dlg, g);
    if (output.empty())
        std::cout << dot;
    else
        write_text_file(output, dot);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"temporal walk centrality of nodes in temporal graphs"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "rank nodes by temporal walk centrality");
    CommonGraphFlags compute_graph;
    compute_graph.attach(*compute);
    std::string phi = "one", phi_m = "one", method = "auto", mode = "twc";
    std::string output, summary;
    double epsilon = 1e-9;
    std::size_t max_length = 0, dense_cap = 20000;
    int threads = 0;
    compute->add_option("--phi", phi, "walk weight: alpha:<v> | time | combined:<v> | one");
    compute->add_option("--phi-m", phi_m, "pair weight: one | time");
    compute->add_option("--method", method, "stream | exact | approx | dag | oracle | auto");
    compute->add_option("--mode", mode, "twc | katz | degree-in | degree-out");
    compute->add_option("--epsilon", epsilon, "fixed-point error tolerance");
    compute->add_option("--max-length", max_length, "oracle walk-length cap");
    compute->add_option("--dense-cap", dense_cap, "exact solver size cap");
    compute->add_option("--threads", threads, "worker threads (default TWC_THREADS or 1)");
    compute->add_option("--output", output, "ranking TSV path (default stdout)");
    compute->add_option("--summary", summary, "run summary JSON path");

    // compare
    auto* compare = app.add_subcommand("compare", "Kendall tau-b matrix of ranking files");
    std::vector<std::string> compare_files;
    double top_fraction = 1.0;
    std::string compare_output;
    compare->add_option("files", compare_files, "ranking TSV files")->required();
    compare->add_option("--top", top_fraction, "restrict to the top fraction of nodes")
        ->check(CLI::Range(1e-9, 1.0));
    compare->add_option("--output", compare_output, "CSV path (default stdout)");

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "graph statistics as JSON");
    CommonGraphFlags stats_graph;
    stats_graph.attach(*stats_cmd);

    // dlg-export
    auto* dlg = app.add_subcommand("dlg-export", "directed line graph expansion as DOT");
    CommonGraphFlags dlg_graph;
    dlg_graph.attach(*dlg);
    std::string dlg_phi = "one", dlg_output;
    dlg->add_option("--phi", dlg_phi, "arc weight function");
    dlg->add_option("--output", dlg_output, "DOT path (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (compute->parsed())
            return run_compute(compute_graph, phi, phi_m, method, mode, epsilon, max_length,
                               dense_cap, threads, output, summary);
        if (compare->parsed()) return run_compare(compare_files, top_fraction, compare_output);
        if (stats_cmd->parsed()) return run_stats(stats_graph);
        if (dlg->parsed()) return run_dlg_export(dlg_graph, dlg_phi, dlg_output);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DivergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}

} // namespace twc::cli
