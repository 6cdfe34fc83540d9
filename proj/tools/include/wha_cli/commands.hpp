#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wha_cli/model.hpp"
#include "wha_cli/report_json.hpp"

namespace wha::cli {

enum ExitCode : int { kOk = 0, kParse = 1, kPrecondition = 2, kVerification = 3 };

const std::vector<std::string>& command_names();

struct RunResult {
    int exit_code = kOk;
    ReportDocument doc;
    std::optional<nlohmann::json> model_out;  // build-frobenius-square
    std::string error;                        // set when exit_code is 1 or 2
};

// Runs one command on a parsed model. Precondition failures are caught and
// reported through exit code 2; everything else is a verdict.
RunResult run_command(const std::string& command, const ModelFile& model, bool timings = false);

}  // namespace wha::cli
