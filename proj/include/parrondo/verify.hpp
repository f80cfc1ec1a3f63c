#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace parrondo {

struct VerifyOptions {
    /// Random draws per identity check.
    int trials = 1000;
    std::uint64_t seed = 42;
    /// Fault injection: offset added to the proper protocol's gain
    /// probability before comparison. Nonzero values must make the
    /// properness check fail (sensitivity control).
    double perturb = 0.0;
    /// Steps for the Monte Carlo convergence check.
    std::uint64_t mc_steps = 1'000'000;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    /// Worst deviation observed (check-specific meaning, see detail).
    double worst = 0.0;
    std::string detail;
};

/// Runs the full invariant suite: properness identities, unitarity,
/// closed form vs solver, eta invariance, restriction identities, FNA
/// gaps, canonical effect values, Monte Carlo convergence.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace parrondo
