#ifndef TTM_TOOLS_CLI_HH
#define TTM_TOOLS_CLI_HH 1

#include <iosfwd>
#include <string>
#include <vector>

namespace ttm
{
    /// Runs one command; args excludes the program name. Returns the exit code:
    /// 0 decided or constructed, 2 budget ran out, 1 usage or parse error.
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
