#ifndef ZGR_CLI_HPP
#define ZGR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace zgr {

/// Exit codes: 0 success, 1 verification failure, 2 usage error / bad input.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zgr

#endif
