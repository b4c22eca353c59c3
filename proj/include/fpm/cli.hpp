#ifndef FPM_CLI_HPP
#define FPM_CLI_HPP

#include <string>
#include <vector>

namespace fpm::cli {

/// Entry point shared by the binary and the tests.
/// Exit codes: 0 success, 1 selftest failure, 2 invalid configuration,
/// 3 numerical failure.
int run(const std::vector<std::string>& args);

}  // namespace fpm::cli

#endif
