#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dqsym/identities.hpp"

namespace dqsym {

enum class Suite { kTheorem1, kTheorem2, kCorollary, kBs, kRecursion, kClosedForms, kAll };

std::optional<Suite> parse_suite(const std::string& name);
std::string suite_name(Suite s);

struct CheckResult {
    std::string name;
    bool passed = false;
    /// Empty on success; otherwise the first counterexample.
    std::string detail;
};

struct VerifyReport {
    int n = 0;
    Suite suite = Suite::kAll;
    std::vector<CheckResult> checks;

    bool passed() const;
    std::size_t failures() const;
};

/// Runs the checks of a suite for weight n, in a fixed order. Failures are
/// recorded in the report, never thrown.
VerifyReport verify(int n, Suite suite, Execution exec = Execution::kParallel, int max_n = kDefaultMaxN);

inline VerifyReport verify_all(int n, Execution exec = Execution::kParallel, int max_n = kDefaultMaxN) {
    return verify(n, Suite::kAll, exec, max_n);
}

/// First differing (I,J) of two expansions, rendered, or nullopt if equal.
std::optional<std::string> first_difference(const BasisExpansion& got, const BasisExpansion& want);
/// First differing biword of two elements, rendered, or nullopt if equal.
std::optional<std::string> first_difference(const Element& got, const Element& want);

}  // namespace dqsym
