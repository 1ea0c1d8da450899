#ifndef MIRRORMAP_CLI_HPP
#define MIRRORMAP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mirrormap::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mirrormap::cli

#endif
