// verification.hpp
//
// Executable form of the project's acceptance criteria. Each check runs at
// its pinned tolerance and time budget; the CLI `verify` subcommand and the
// acceptance test binary both drive this list.
#ifndef LIFSHITZ_VERIFICATION_HPP
#define LIFSHITZ_VERIFICATION_HPP

#include <string>
#include <vector>

namespace lifshitz::verify {

struct CheckOptions {
    /// Id of a check whose implementation-side value is perturbed by a
    /// relative 1e-3 (or an absolute 1e-3 where the target is zero) before
    /// comparison. Used to prove that the suite can fail.
    std::string inject_fault;
};

struct CheckResult {
    std::string id;
    std::string description;
    bool passed = false;
    double measured = 0;   ///< worst deviation observed
    double threshold = 0;  ///< pinned tolerance on `measured`
    double seconds = 0;
    double time_limit = 0;
    std::string detail;
};

/// Ids in criterion order.
const std::vector<std::string>& check_ids();

/// Throws std::invalid_argument on an unknown id.
CheckResult run_check(const std::string& id, const CheckOptions& options = {});

std::vector<CheckResult> run_all(const CheckOptions& options = {});

}  // namespace lifshitz::verify

#endif  // LIFSHITZ_VERIFICATION_HPP
