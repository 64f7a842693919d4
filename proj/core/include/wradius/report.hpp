#pragma once

#include <string>

#include "wradius/analysis.hpp"
#include "wradius/corpus.hpp"
#include "wradius/search.hpp"

namespace wradius {

struct ReportOptions {
    /// Wall-clock fields make otherwise identical reports differ; turn them
    /// off for byte-for-byte comparisons.
    bool timings = true;
    int indent = 2;
};

/// JSON with sections input, lower_bounds, upper_bounds, w_sq, equality,
/// verdicts, errors and (optionally) timings. Numbers are written in the
/// shortest form that reads back to the same double; NaN becomes null.
std::string report_to_json(const ChainReport& r, const ReportOptions& options = {});

/// "section,key,value" rows covering the same fields; numbers with 17
/// significant digits.
std::string report_to_csv(const ChainReport& r, const ReportOptions& options = {});

std::string summary_to_json(const CorpusSummary& s, const ReportOptions& options = {});
/// One row per invariant: id,passed,failed,skipped,worst_slack,worst_label.
std::string summary_to_csv(const CorpusSummary& s);

std::string search_to_json(const SearchResult& r, const ReportOptions& options = {});
std::string search_to_csv(const SearchResult& r);

}  // namespace wradius
