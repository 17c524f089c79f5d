// Report rendering. Three formats share one source of truth (RangeSummary):
//
//   json - the full summary document, stable key order, 2-space indent
//   csv  - flat counterexample records: check,subject,subject_hi,mi,value,note
//   text - human-readable digest: config echo, tallies, extremes, records
//
// Every format is a pure function of the summary, so two runs that produce
// equal summaries produce byte-identical reports.
#pragma once

#include <string>

#include "paritygap/summary.hpp"

namespace paritygap {

enum class ReportFormat { json, csv, text };

// Parses "json" | "csv" | "text". Throws UsageError on anything else.
ReportFormat report_format_from_token(const std::string& token);

std::string emit_report(const RangeSummary& summary, ReportFormat format);

// 0 when every enabled check held everywhere, 1 when at least one
// counterexample or a parity/identity divergence was recorded.
int exit_code_for(const RangeSummary& summary);

}  // namespace paritygap
