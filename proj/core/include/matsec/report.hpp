#pragma once

#include <string>

#include "matsec/exact_oracle.hpp"
#include "matsec/stats.hpp"

namespace matsec {

enum class ReportFormat { kCsv, kJson };

ReportFormat report_format_from_string(const std::string& name);

// One summary row; header + row. Wall time is deliberately not a column, so
// a rerun with the same seed produces byte-identical CSV.
std::string stats_csv(const RunStats& stats);

// Long-format per-element selection frequencies (instance, algorithm,
// element, frequency); header-only when there are no frequencies.
std::string frequencies_csv(const RunStats& stats);

std::string stats_json(const RunStats& stats);
RunStats parse_stats_json(const std::string& text);

std::string exact_report_json(const ExactReport& report);
std::string exact_report_csv(const ExactReport& report);  // summary row

// Writes the main report to `path` ("-" or empty: stdout). For CSV stats
// with frequencies, a companion "<path>.freq.csv" carries the long format.
void emit_report(const RunStats& stats, ReportFormat format, const std::string& path);
void emit_report(const ExactReport& report, ReportFormat format, const std::string& path);

}  // namespace matsec
