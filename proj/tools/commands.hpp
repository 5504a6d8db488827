#ifndef MODJAC_TOOLS_COMMANDS_HPP
#define MODJAC_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace modjac::cli {

enum ExitCode { kPass = 0, kCheckFailed = 1, kUsage = 2 };

// Parses argv and runs the requested command. Output goes to out unless --out is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modjac::cli

#endif
