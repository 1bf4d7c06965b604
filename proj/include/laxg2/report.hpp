#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "laxg2/cocycle.hpp"

namespace laxg2 {

// One verification target: a surface with marked points, a grading, and the
// jet truncation used by the local suites.
struct RunConfig {
    SurfaceSpec surface;
    GradingSpec grading;
    int truncation = 3;
    std::string name; // label echoed into reports
};

// Parses the JSON configuration text. Throws ConfigError with a pointed
// message for every way the input can be wrong (bad JSON, genus != 0,
// non-orthogonal marked directions, malformed grading, ...).
RunConfig parse_config(const std::string& json_text, const std::string& name = "");
RunConfig load_config(const std::string& path);

// One verified claim. Records are sorted by id then params, so a report is
// reproducible independent of evaluation order.
struct CheckRecord {
    std::string id;
    std::string claim;
    std::string params;
    std::string expected;
    std::string actual;
    bool pass = false;
};

// Canonical suite order; run_suites rejects names outside this list.
const std::vector<std::string>& suite_names();

std::vector<CheckRecord> run_suites(const RunConfig& cfg, const std::vector<std::string>& suites,
                                    std::uint64_t seed, int trials);

// JSON report; byte-stable for fixed inputs except the generated_at line.
std::string render_report(const RunConfig& cfg, const std::vector<std::string>& suites,
                          std::uint64_t seed, int trials, const std::vector<CheckRecord>& records);

// Graded dimensions over a degree range. Deviations from the generic count
// are flagged, not raised: small configurations genuinely have them.
struct DimensionRow {
    int degree = 0;
    int dim = 0;
    int generic = 0;
    bool deviates = false;
};
std::vector<DimensionRow> dimension_table(const RunConfig& cfg, int lo, int hi);
std::string render_table(const RunConfig& cfg, const std::vector<DimensionRow>& rows);

// Machine-readable snapshot of the graded bases and the corrective form,
// for regression diffing. Deterministic; parse_fixture rebuilds the exact
// elements and render must round-trip byte for byte.
std::string render_fixture(const RunConfig& cfg, int lo, int hi);
struct Fixture {
    std::string config_name;
    std::vector<std::pair<int, std::vector<GlobalElement>>> bases;
    OmegaForm omega;
};
std::string render_fixture(const Fixture& f);
Fixture parse_fixture(const std::string& json_text);

} // namespace laxg2
