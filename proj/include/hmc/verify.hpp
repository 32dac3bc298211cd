#ifndef HMC_VERIFY_HPP
#define HMC_VERIFY_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hmc/series.hpp"

namespace hmc {

struct CheckResult {
    std::string name;
    bool passed = false;
    /// Residual or error text on failure; optional note (e.g. a measured sign) on success.
    std::string detail;
    double seconds = 0.0;
};

struct VerifySuiteResult {
    std::vector<CheckResult> checks;
    bool passed() const;
    /// First failing check, or nullptr.
    const CheckResult* first_failure() const;
};

/// golden, richardson, vanishing, transfinity, elimination, schwarz,
/// exptransform, jacobian, proof
const std::vector<std::string>& suite_names();

/// Runs the named suites (all when empty). Symbolic depth is capped at
/// n_max; the Jacobian suite switches to exact rational points above n = 2.
VerifySuiteResult run_verify(int n_max, const std::set<std::string>& suites = {});

/// Exact evaluation point: a_0 a positive rational, a_k and abar_k
/// independent small rationals. Deterministic in the seed.
CoefficientVector random_rational_point(int n, std::uint64_t seed);

/// Expected golden texts (corrected where the printed source has typos).
struct GoldenExpression {
    std::string name;
    std::string expected;
};
const std::vector<GoldenExpression>& golden_expressions();

} // namespace hmc

#endif
