#ifndef HSINFO_TOOLS_CLI_HPP
#define HSINFO_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hsinfo::cli {

enum ExitCode : int { ok = 0, input_error = 2, io_error = 3, validation_failure = 4 };

/// Runs `hsinfo <args...>` (args excludes the program name). Results go to `out`
/// unless --out names a file; diagnostics and warnings go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hsinfo::cli

#endif  // HSINFO_TOOLS_CLI_HPP
