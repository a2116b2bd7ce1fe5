#ifndef QCIRC_CLI_HPP
#define QCIRC_CLI_HPP

#include <iosfwd>
#include <span>
#include <string>

namespace qcirc::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Runs one command. `args` excludes the program name. JSON goes to `out`,
/// diagnostics to `err`; `in` backs the `-` file argument.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace qcirc::cli

#endif  // QCIRC_CLI_HPP
