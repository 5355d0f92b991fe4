// config.hpp
//
// Run configuration for the lifshitz-fidelity front end. Values arrive as
// strings from a flat key=value file and from command-line flags (flags
// win), are resolved into typed parameter blocks, and can be echoed back in
// a canonical form that parses to the same configuration.
#ifndef LIFSHITZ_CLI_CONFIG_HPP
#define LIFSHITZ_CLI_CONFIG_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lifshitz/boundary_qm.hpp"
#include "lifshitz/bulk_geometry.hpp"
#include "lifshitz/quadrature.hpp"

namespace lifshitz::cli {

/// Malformed or inconsistent configuration. Maps to exit code 1.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Subcommand { boundary, bulk, match, sweep, verify };
enum class OutputFormat { csv, json };
enum class Spacing { linear, log };

const char* to_string(Subcommand s);
Subcommand parse_subcommand(const std::string& name);

struct SweepAxis {
    std::string key = "Q";
    double from = 1;
    double to = 10;
    int points = 10;
    Spacing spacing = Spacing::linear;

    std::vector<double> values() const;
};

/// Fully resolved configuration.
struct RunConfig {
    Subcommand subcommand = Subcommand::verify;
    BosonGasParams<double> boundary;
    /// Front-end default xi = -0.1 keeps the z = 4 susceptibility monotone in
    /// Q over the default sweep range [1, 10] (monotone for Q < 9/(4 L^2 |xi|)).
    BulkParams<double> bulk{.xi = -0.1};
    bool lambda_auto = true;  ///< Lambda follows -3/L^2
    bool radius_auto = true;  ///< R follows L
    double r_inf = 100;
    QuadratureSpec quadrature;
    SweepAxis sweep;

    std::optional<std::filesystem::path> out;
    OutputFormat format = OutputFormat::csv;
    unsigned workers = 1;
    std::string inject_fault;
    std::string only;

    /// Sets a numeric parameter by key, keeping Lambda and R tied to L when
    /// they are in automatic mode.
    void set(const std::string& key, double value);

    /// Canonical (key, value) pairs in fixed order. Feeding these back through
    /// parse_config_text reproduces the same physics and sweep settings.
    std::vector<std::pair<std::string, std::string>> echo() const;
};

/// Parameter keys accepted in files and as --key flags, in echo order.
const std::vector<std::string>& parameter_keys();

/// Keys a sweep may vary (numeric parameter keys other than Lambda).
bool is_sweepable(const std::string& key);

/// Maps accepted spellings of the charge axis ("Q", "Qt", "Q~", U+0303 form)
/// to the canonical key; other names are returned unchanged.
std::string canonical_axis(const std::string& name);

using RawValues = std::map<std::string, std::string>;

/// Parses flat key=value text. Blank lines and lines starting with '#' are
/// skipped; `source` names the input in error messages.
RawValues parse_config_text(const std::string& text, const std::string& source = "config");
RawValues read_config_file(const std::filesystem::path& path);

/// Applies defaults, then `file`, then `flags`, and validates the result.
RunConfig resolve(Subcommand sub, const RawValues& file, const RawValues& flags);

/// Shortest round-trip decimal representation.
std::string format_number(double v);

/// Worker count from LF_WORKERS, else hardware concurrency (at least 1).
unsigned default_workers();

}  // namespace lifshitz::cli

#endif  // LIFSHITZ_CLI_CONFIG_HPP
