#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "wha/report.hpp"

namespace wha::cli {

inline constexpr int kReportSchemaVersion = 1;

// One run of a command: the suites in execution order, items sorted by id.
struct ReportDocument {
    int schema_version = kReportSchemaVersion;
    std::string command;
    std::string model;
    std::string kind;
    std::string field;
    std::vector<Report> reports;
    int exit_code = 0;
    // elapsed_ms is only serialized when set; it is the one nondeterministic field
    bool timings = false;

    std::size_t count(Verdict v) const;
    bool operator==(const ReportDocument& o) const;
};

nlohmann::json to_json(const ReportDocument& d);
ReportDocument report_from_json(const nlohmann::json& j);  // throws SchemaError
// Pretty-printed with sorted keys and a trailing newline.
std::string dump(const nlohmann::json& j);

std::string human_summary(const ReportDocument& d);

}  // namespace wha::cli
