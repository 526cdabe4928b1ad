#pragma once

#include <string>
#include <vector>

#include "cremona_cli/report.hpp"

namespace cremona::cli {

// Names accepted by run(), including aliases.
const std::vector<std::string>& command_names();
// Argument synopsis, e.g. "F G"; empty for unknown commands.
std::string usage(const std::string& command);

// Throws UnknownCommand, InvalidArgument on arity, and any module error.
Report run(const std::string& command, const std::vector<std::string>& args, const Options& opts = {});

// Like run(), but module errors become an Error report.
Report run_safe(const std::string& command, const std::vector<std::string>& args, const Options& opts = {});

}  // namespace cremona::cli
