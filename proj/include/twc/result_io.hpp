#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "twc/centrality.hpp"

namespace twc {

/// Writes `rank<TAB>label<TAB>score` rows in ranking order. Scores carry 12
/// significant digits; equal scores share a competition rank.
void write_tsv(std::ostream& out, const CentralityResult& result,
               const std::vector<std::string>& labels);

struct LoadedResult {
    std::vector<std::string> labels; // in file order
    std::vector<double> scores;
};

/// Reads a ranking TSV back (the rank column is ignored).
LoadedResult read_tsv(std::istream& in);

/// Symmetric correlation matrix as CSV with a leading header row and a label
/// column.
void write_correlation_csv(std::ostream& out, const std::vector<std::string>& names,
                           const std::vector<std::vector<double>>& matrix);

/// Fixed 12-significant-digit rendering used for all numeric output.
std::string format_score(double value);

} // namespace twc
