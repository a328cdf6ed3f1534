#pragma once

#include <optional>
#include <string>
#include <vector>

namespace growthlab {

// One recomputed reference figure. `reference` is the stated value (or the
// binding limit for one-sided checks); `criterion` spells out the tolerance
// the verdict applied.
struct CheckResult {
    std::string name;
    double computed = 0.0;
    double reference = 0.0;
    std::string criterion;
    bool passed = false;
};

struct VerifyOptions {
    std::string filter;  // substring match on check names; empty runs all
    std::optional<double> lambda_override;
    std::optional<double> beta_override;
};

// Recomputes every stated headline figure of the model and compares it to
// its reference at the tolerance pinned for that check. Failures are data,
// not exceptions. Ordering is fixed.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

int failure_count(const std::vector<CheckResult>& results);

std::string verification_text(const std::vector<CheckResult>& results);
std::string verification_csv(const std::vector<CheckResult>& results);

} // namespace growthlab
