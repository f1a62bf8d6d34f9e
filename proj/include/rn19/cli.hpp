#ifndef RN19_CLI_HPP
#define RN19_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace rn19::cli {

/// Runs one CLI invocation. Exit codes: 0 success, 1 argument error,
/// 2 failed verification / unclosed certificate.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rn19::cli

#endif
