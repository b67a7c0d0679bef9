#pragma once

// Machine-checked identities run by `kudla verify`. Each check reports its
// worst-case row: lhs, rhs and the diff compared with the tolerance.

#include <optional>
#include <string>
#include <vector>

namespace kudla {

struct CheckResult {
    std::string name;
    std::string description;
    double lhs = 0.0;
    double rhs = 0.0;
    double diff = 0.0;      // relative unless `absolute`
    bool absolute = false;
    bool exact = false;     // exact rational comparison, diff is 0 or 1
    bool pass = false;
};

/// Names accepted by run_verification's `only` filter.
std::vector<std::string> verification_names();

/// Runs every check (or only `only`); throws DomainError for an unknown name.
std::vector<CheckResult> run_verification(double tol, const std::optional<std::string>& only = std::nullopt);

}  // namespace kudla
