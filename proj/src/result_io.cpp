#include "twc/result_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

#include "twc/errors.hpp"

namespace twc {

std::string format_score(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

void write_tsv(std::ostream& out, const CentralityResult& result,
               const std::vector<std::string>& labels) {
    const auto ranks = result.competition_ranks();
    auto score_of = [&](NodeId v) {
        const auto it = std::lower_bound(result.nodes.begin(), result.nodes.end(), v);
        return result.scores[static_cast<std::size_t>(it - result.nodes.begin())];
    };
    for (std::size_t i = 0; i < result.ranking.size(); ++i) {
        const NodeId v = result.ranking[i];
        out << ranks[i] << '\t' << labels[v] << '\t' << format_score(score_of(v)) << '\n';
    }
}

LoadedResult read_tsv(std::istream& in) {
    LoadedResult result;
    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const std::size_t tab1 = line.find('\t');
        const std::size_t tab2 = tab1 == std::string::npos ? std::string::npos
                                                           : line.find('\t', tab1 + 1);
        if (tab2 == std::string::npos)
            throw ParseError("expected 'rank<TAB>label<TAB>score'", line_no);
        const std::string label = line.substr(tab1 + 1, tab2 - tab1 - 1);
        const std::string score_text = line.substr(tab2 + 1);
        double score = 0.0;
        const char* begin = score_text.c_str();
        const char* end = begin + score_text.size();
        auto [ptr, ec] = std::from_chars(begin, end, score);
        if (ec != std::errc() || ptr != end)
            throw ParseError("malformed score '" + score_text + "'", line_no);
        result.labels.push_back(label);
        result.scores.push_back(score);
    }
    return result;
}

void write_correlation_csv(std::ostream& out, const std::vector<std::string>& names,
                           const std::vector<std::vector<double>>& matrix) {
    out << "label";
    for (const auto& name : names) out << ',' << name;
    out << '\n';
    for (std::size_t r = 0; r < matrix.size(); ++r) {
        out << names[r];
        for (double value : matrix[r]) out << ',' << format_score(value);
        out << '\n';
    }
}

} // namespace twc
