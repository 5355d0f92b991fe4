// commands.hpp
//
// Subcommand drivers. Each produces a set of named artifacts; `run` writes
// them to the output directory (or the primary one to stdout) and maps
// failures onto exit codes: 1 for configuration problems, 2 for numerical
// failures and failed verification checks.
#ifndef LIFSHITZ_CLI_COMMANDS_HPP
#define LIFSHITZ_CLI_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"

namespace lifshitz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;

struct Artifact {
    std::string name;
    std::string content;
};

struct Rendered {
    int exit_code = kExitOk;
    std::vector<Artifact> artifacts;  ///< artifacts.front() is the primary one
    std::string console;              ///< human-readable summary (verify only)
};

/// Sweep CSV column names, in order, for the given axis key.
std::vector<std::string> sweep_columns(const std::string& axis);

/// Computes all artifacts for `config`. Numerical failures propagate as
/// lifshitz::NumericalError.
Rendered render(const RunConfig& config);

/// render + write + error mapping.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace lifshitz::cli

#endif  // LIFSHITZ_CLI_COMMANDS_HPP
