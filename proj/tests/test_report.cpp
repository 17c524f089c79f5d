#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "paritygap/engine.hpp"
#include "paritygap/report.hpp"

using namespace paritygap;

namespace {

ScanConfig make_config(uint64_t lo, uint64_t hi, const std::string& checks) {
    ScanConfig cfg;
    cfg.range_lo = lo;
    cfg.range_hi = hi;
    cfg.checks = checks.empty() ? CheckSet::all() : CheckSet::parse(checks);
    return cfg;
}

// Asserts that a JSON tree contains integers and strings only: every
// numeric leaf must be integral, so no reader ever sees a float.
void assert_integral(const nlohmann::json& j) {
    if (j.is_object() || j.is_array()) {
        for (const auto& child : j) assert_integral(child);
    } else if (j.is_number()) {
        CHECK(j.is_number_integer());
    } else {
        CHECK((j.is_string() || j.is_null() || j.is_boolean()));
        CHECK_FALSE(j.is_boolean());  // the schema never uses booleans
    }
}

}  // namespace

TEST_CASE("format tokens parse exactly") {
    CHECK(report_format_from_token("json") == ReportFormat::json);
    CHECK(report_format_from_token("csv") == ReportFormat::csv);
    CHECK(report_format_from_token("text") == ReportFormat::text);
    CHECK_THROWS_AS(report_format_from_token("yaml"), UsageError);
    CHECK_THROWS_AS(report_format_from_token(""), UsageError);
    CHECK_THROWS_AS(report_format_from_token("JSON"), UsageError);
}

TEST_CASE("summaries survive the JSON round trip byte for byte") {
    ScanConfig cfg = make_config(3, 5000, "");
    RangeSummary s = run_scan(cfg);

    nlohmann::json j = summary_to_json(s);
    RangeSummary back = summary_from_json(j);
    CHECK(back == s);
    CHECK(summary_to_json(back).dump(2) == j.dump(2));

    // Serialization is deterministic: emitting twice gives identical bytes.
    CHECK(emit_report(s, ReportFormat::json) == emit_report(s, ReportFormat::json));
    CHECK(emit_report(s, ReportFormat::json) == j.dump(2) + "\n");
}

TEST_CASE("the JSON schema carries integers and strings only") {
    ScanConfig cfg = make_config(3, 1000, "");
    nlohmann::json j = summary_to_json(run_scan(cfg));

    assert_integral(j);
    CHECK(j.at("schema_version") == 1);
    CHECK(j.at("config").at("range_lo") == 3);
    CHECK(j.at("config").at("range_hi") == 1000);
    CHECK(j.at("config").at("square_lo") == 1);
    CHECK(j.at("config").at("square_hi") == 32);  // isqrt(1000) + 1
    CHECK(j.at("counters").at("divergences") == 0);
    CHECK(j.at("checks").size() == kCheckCount);
    CHECK(j.at("counterexamples").size() == kCheckCount);
    // The rank key renders as an exact rational string.
    std::string key = j.at("extremes").at("max_andrica").at("key").get<std::string>();
    CHECK(key == "2881379653/4294967296");
}

TEST_CASE("an empty summary reports zeros and null extremes") {
    ScanConfig cfg = normalized(make_config(3, 100, "parity"));
    RangeSummary s = empty_summary(cfg);
    nlohmann::json j = summary_to_json(s);
    CHECK(j.at("counters").at("pairs_checked") == 0);
    CHECK(j.at("counters").at("divisions") == 0);
    CHECK(j.at("extremes").at("max_gap").is_null());
    CHECK(j.at("extremes").at("min_theorem1_margin").is_null());
    CHECK(j.at("extremes").at("max_andrica").is_null());
    CHECK(summary_from_json(j) == s);
    CHECK(exit_code_for(s) == 0);
}

TEST_CASE("csv lists one row per counterexample record") {
    RangeSummary clean = run_scan(make_config(3, 100, "parity"));
    CHECK(emit_report(clean, ReportFormat::csv) ==
          "check,subject,subject_hi,mi,value,note\n");

    RangeSummary s = run_scan(make_config(3, 200, "parity,beyond_midpoint"));
    CHECK(emit_report(s, ReportFormat::csv) ==
          "check,subject,subject_hi,mi,value,note\n"
          "beyond_midpoint,7,11,10,98,even_multiple_past_midpoint\n"
          "beyond_midpoint,23,29,28,782,even_multiple_past_midpoint\n"
          "beyond_midpoint,113,127,124,15368,even_multiple_past_midpoint\n");
}

TEST_CASE("csv quotes fields that need it") {
    ScanConfig cfg = normalized(make_config(3, 100, "parity"));
    RangeSummary s = empty_summary(cfg);
    add_counterexample(s, CheckKind::parity, {5, 7, 6, 30, "has,comma"});
    add_counterexample(s, CheckKind::parity, {11, 13, 12, 60, "has \"quote\""});
    CHECK(emit_report(s, ReportFormat::csv) ==
          "check,subject,subject_hi,mi,value,note\n"
          "parity,5,7,6,30,\"has,comma\"\n"
          "parity,11,13,12,60,\"has \"\"quote\"\"\"\n");
}

TEST_CASE("the text report renders tallies, extremes, and records") {
    ScanConfig cfg = make_config(3, 200, "parity,theorem1,andrica,beyond_midpoint");
    RangeSummary s = run_scan(cfg);
    std::string text = emit_report(s, ReportFormat::text);

    CHECK(text.find("parity-gap scan report (schema 1)\n") == 0);
    CHECK(text.find("config digest: " + s.config_digest + "\n") != std::string::npos);
    CHECK(text.find("pair range: [3, 200)\n") != std::string::npos);
    CHECK(text.find("square index range:") == std::string::npos);
    CHECK(text.find("checks: andrica beyond_midpoint parity theorem1\n") !=
          std::string::npos);
    CHECK(text.find("pairs checked: 45\n") != std::string::npos);
    CHECK(text.find("parity: 45 held, 0 failed\n") != std::string::npos);
    CHECK(text.find("beyond_midpoint: 42 held, 3 failed\n") != std::string::npos);
    CHECK(text.find("largest gap: 14 after p_lo=113\n") != std::string::npos);
    CHECK(text.find("smallest gap-bound margin: 8 at p_lo=3\n") != std::string::npos);
    CHECK(text.find("largest sqrt gap: pair (7, 11) key=2881379653/4294967296\n") !=
          std::string::npos);
    CHECK(text.find("counterexamples: 3\n") != std::string::npos);
    CHECK(text.find("beyond_midpoint subject=7 subject_hi=11 mi=10 value=98 "
                    "note=even_multiple_past_midpoint\n") != std::string::npos);
    CHECK(text.find("suppressed") == std::string::npos);

    RangeSummary clean = run_scan(make_config(3, 100, "parity"));
    std::string clean_text = emit_report(clean, ReportFormat::text);
    CHECK(clean_text.find("counterexamples: none\n") != std::string::npos);
    CHECK(clean_text.find("square index range:") == std::string::npos);
    CHECK(clean_text.find("squares checked: 0\n") != std::string::npos);
}

TEST_CASE("suppressed overflow is announced in the text report") {
    ScanConfig cfg = make_config(3, 200, "beyond_midpoint");
    cfg.counterexample_cap = 1;
    std::string text = emit_report(run_scan(cfg), ReportFormat::text);
    CHECK(text.find("counterexamples: 3\n") != std::string::npos);
    CHECK(text.find("beyond_midpoint (+2 suppressed beyond cap)\n") !=
          std::string::npos);
}

TEST_CASE("exit codes: zero for clean scans, one for recorded failures") {
    CHECK(exit_code_for(run_scan(make_config(3, 100, "parity"))) == 0);
    CHECK(exit_code_for(run_scan(make_config(3, 200, "beyond_midpoint"))) == 1);

    // Suppressed-but-uncounted records still force a nonzero exit.
    ScanConfig capped = make_config(3, 200, "beyond_midpoint");
    capped.counterexample_cap = 1;
    CHECK(exit_code_for(run_scan(capped)) == 1);

    // A divergence alone (no record) would also flip the code.
    RangeSummary synthetic = empty_summary(normalized(make_config(3, 100, "parity")));
    synthetic.divergence_count = 1;
    CHECK(exit_code_for(synthetic) == 1);
}
