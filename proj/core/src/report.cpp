#include "paritygap/report.hpp"

#include <sstream>

#include "paritygap/conjectures.hpp"
#include "paritygap/errors.hpp"

namespace paritygap {

namespace {

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (char c : raw) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string emit_csv(const RangeSummary& s) {
    std::ostringstream out;
    out << "check,subject,subject_hi,mi,value,note\n";
    for (CheckKind kind : s.checks.kinds()) {
        const CounterexampleList& list = s.records(kind);
        for (const CounterexampleRecord& r : list.records) {
            out << check_token(kind) << ',' << r.subject << ',';
            if (r.subject_hi != 0) out << r.subject_hi;
            out << ',';
            if (r.mi != 0) out << r.mi;
            out << ',' << r.value << ',' << csv_field(r.note) << '\n';
        }
    }
    return out.str();
}

std::string emit_text(const RangeSummary& s) {
    std::ostringstream out;
    out << "parity-gap scan report (schema " << s.schema_version << ")\n";
    out << "config digest: " << s.config_digest << "\n";
    if (s.checks.any_pair_check()) {
        out << "pair range: [" << s.range_lo << ", " << s.range_hi << ")\n";
    }
    if (s.checks.any_square_check()) {
        out << "square index range: [" << s.square_lo << ", " << s.square_hi
            << ")\n";
    }
    out << "checks:";
    for (const std::string& token : s.checks.sorted_tokens()) out << ' ' << token;
    out << "\n";
    out << "pairs checked: " << s.pairs_checked << "\n";
    out << "squares checked: " << s.squares_checked << "\n";
    out << "divisions: " << s.divisions << "\n";
    out << "divergences: " << s.divergence_count << "\n";
    out << "results:\n";
    for (CheckKind kind : s.checks.kinds()) {
        const CheckTally& t = s.tally(kind);
        out << "  " << check_token(kind) << ": " << t.holds << " held, "
            << t.fails << " failed\n";
    }
    if (s.max_gap) {
        out << "largest gap: " << s.max_gap->gap << " after p_lo="
            << s.max_gap->p_lo << "\n";
    }
    if (s.min_theorem1_margin) {
        out << "smallest gap-bound margin: " << s.min_theorem1_margin->margin
            << " at p_lo=" << s.min_theorem1_margin->p_lo << "\n";
    }
    if (s.max_andrica) {
        out << "largest sqrt gap: pair (" << s.max_andrica->pair.p_lo << ", "
            << s.max_andrica->pair.p_hi << ") key="
            << rank_key_rational(s.max_andrica->rank_key) << "\n";
    }
    uint64_t total = s.total_counterexamples();
    if (total == 0) {
        out << "counterexamples: none\n";
    } else {
        out << "counterexamples: " << total << "\n";
        for (CheckKind kind : s.checks.kinds()) {
            const CounterexampleList& list = s.records(kind);
            for (const CounterexampleRecord& r : list.records) {
                out << "  " << check_token(kind) << " subject=" << r.subject;
                if (r.subject_hi != 0) out << " subject_hi=" << r.subject_hi;
                if (r.mi != 0) out << " mi=" << r.mi;
                out << " value=" << r.value << " note=" << r.note << "\n";
            }
            if (list.suppressed != 0) {
                out << "  " << check_token(kind) << " (+" << list.suppressed
                    << " suppressed beyond cap)\n";
            }
        }
    }
    return out.str();
}

}  // namespace

ReportFormat report_format_from_token(const std::string& token) {
    if (token == "json") return ReportFormat::json;
    if (token == "csv") return ReportFormat::csv;
    if (token == "text") return ReportFormat::text;
    throw UsageError("unknown report format: " + token);
}

std::string emit_report(const RangeSummary& summary, ReportFormat format) {
    switch (format) {
        case ReportFormat::json:
            return summary_to_json(summary).dump(2) + "\n";
        case ReportFormat::csv:
            return emit_csv(summary);
        case ReportFormat::text:
            return emit_text(summary);
    }
    throw UsageError("unknown report format");
}

int exit_code_for(const RangeSummary& summary) {
    return (summary.total_counterexamples() > 0 || summary.divergence_count > 0)
               ? 1
               : 0;
}

}  // namespace paritygap
