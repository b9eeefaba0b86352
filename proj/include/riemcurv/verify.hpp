#pragma once

#include <string>
#include <vector>

#include "riemcurv/hermitian.hpp"
#include "riemcurv/immersion.hpp"

namespace riemcurv {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first failing coefficient on failure
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

struct VerifyOptions {
    long order = 12;
    ExactScalar lambda = ExactScalar::lambda();  // symbolic by default
};

/// Names of the identity suites, in canonical order.
const std::vector<std::string>& suite_names();

/// Whether the suite converts through the hermitian bases and therefore
/// needs an invertible curvature.
bool suite_needs_invertible_lambda(const std::string& name);

/// Runs one suite. Independent checks may execute concurrently; the report
/// order is fixed regardless of scheduling.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opts);

}  // namespace riemcurv
