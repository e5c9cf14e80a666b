#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypfn/report.hpp"

namespace hypfn::cli {

struct SuiteRow {
    std::string check;
    NamedValues inputs;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool pass = true;
};

struct SuiteResult {
    std::string name;
    std::string statement;
    std::vector<std::string> grid;  // axis descriptions and sampling notes
    std::size_t total = 0;
    std::size_t skipped = 0;
    std::vector<SuiteRow> rows;  // every evaluated check; filled only when requested
    std::vector<SuiteRow> failures;  // sorted by input tuple
    std::optional<double> min_slack;
    std::vector<std::string> findings;  // reported discrepancies that do not fail the suite
    double wall_seconds = 0.0;

    bool passed() const { return failures.empty(); }
};

struct SuiteOptions {
    std::vector<std::string> grid_overrides;  // lo:hi:steps[:lin|log], one per axis in order
    std::optional<double> bishop_c;           // pins the C axis of the sandwich suite
    bool keep_rows = false;
};

const std::vector<std::string>& suite_names();

/// Runs one suite. Throws UsageError for unknown names or bad grid overrides.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

std::string render_suite(const SuiteResult& r);
std::string csv_header();
std::string csv_rows(const SuiteResult& r);

}  // namespace hypfn::cli
