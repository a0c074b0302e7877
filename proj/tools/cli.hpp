#ifndef RIGIDSPACE_TOOLS_CLI_HPP
#define RIGIDSPACE_TOOLS_CLI_HPP

// Subcommand bodies of the rigidspace executable, kept separate from argument
// parsing so tests can drive them directly.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rigidspace/matrix_groups.hpp"
#include "rigidspace/quotient.hpp"
#include "rigidspace/verify.hpp"

namespace rigidspace::cli
{

enum ExitCode
{
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
};

struct CommandResult
{
  std::string output;
  int exit_code = kSuccess;
};

/// Bad arguments or unparsable input; maps to exit code 2.
class UsageError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// "P:n", "P+:n", "P-:n", "Ppm:<partition>" or "Q8".
CommandResult cmd_enumerate(std::string_view group_spec, const RunConfig &config);
CommandResult cmd_verify(std::string_view suite, const RunConfig &config);
/// classes: optional "d" or "b" to also list the induced factorization.
CommandResult cmd_quotient(std::string_view subgroup_spec, std::string_view vector,
                           const std::optional<std::string> &classes, const RunConfig &config);
CommandResult cmd_decompose(std::string_view matrix_json, const RunConfig &config);
/// kind: "su-to-so" or "quat-to-perm"; n is the complex matrix size.
CommandResult cmd_embed(std::string_view kind, int n, const RunConfig &config);

/// Row-major JSON array of rows; entries are numbers or [re, im] pairs.
ComplexMatrix parse_matrix_json(std::string_view text);
std::string matrix_to_json(const RealMatrix &m);

} // namespace rigidspace::cli

#endif // RIGIDSPACE_TOOLS_CLI_HPP
