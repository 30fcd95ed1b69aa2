#pragma once

#include <ostream>

#include "effbounds/cli/config.hpp"
#include "json.hpp"

namespace effbounds::cli {

enum ExitCode { kOk = 0, kPropertyFailure = 1, kInvalidInput = 2, kCapacity = 3 };

// errc -> exit code
int exit_code_for(errc code);

nlohmann::json config_json(const RunConfig& cfg);

int cmd_shafarevich(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_mordell(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_geom_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Dispatches on cfg.command and maps library errors to exit codes.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace effbounds::cli
