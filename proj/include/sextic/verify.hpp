#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sextic {

struct VerifyOptions {
    /// Replaces every suite's residual tolerance when set.
    std::optional<double> tol;
    std::size_t samples = 100;
    std::uint64_t seed = 1;
};

/// bound: residual must stay below the tolerance.
/// witness: the measured gap must exceed a fixed threshold.
/// count: the number of violations must be zero.
enum class CheckKind { bound, witness, count };

struct SuiteResult {
    std::string name;
    CheckKind kind;
    double measured;
    double threshold;
    bool passed;
    std::string detail;
};

struct VerifyReport {
    std::vector<SuiteResult> suites;

    bool all_passed() const;
};

/// Runs every property suite. Deterministic for a given seed.
VerifyReport run_verification(const VerifyOptions& options);

/// One line per suite, then a summary line.
void print_report(std::ostream& out, const VerifyReport& report);

}  // namespace sextic
