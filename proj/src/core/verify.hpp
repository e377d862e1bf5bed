#pragma once

#include <string>
#include <utility>
#include <vector>

#include "types.hpp"

namespace abcalc::verify {

enum class Expectation : std::uint8_t {
    within_tolerance,  // passed ⇔ every deviation <= tol
    gap_above,         // passed ⇔ every measured gap > tol (structural non-identities)
    error_reported,    // passed ⇔ every case raises the expected error
};

struct CaseRecord {
    std::vector<std::pair<std::string, std::string>> params;
    double deviation = 0.0;  // NaN when the case raised an error
    double tol = 0.0;
    bool passed = false;
    std::string status;  // "ok", "skipped:guard", "error:<Code>: ...", "expected-gap: confirmed", ...
};

struct PropertyReport {
    std::string suite;
    std::string name;
    Expectation expectation = Expectation::within_tolerance;
    // Largest deviation; for gap_above the smallest gap.
    double max_abs_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::vector<CaseRecord> cases;
};

struct SuiteOptions {
    // > 0 replaces the nominal tolerance of within_tolerance properties.
    double tol = 0.0;
};

std::vector<PropertyReport> run_golden_suite(const SuiteOptions& opt = {});
std::vector<PropertyReport> run_identity_suite(const SuiteOptions& opt = {});
std::vector<PropertyReport> run_continuation_suite(const SuiteOptions& opt = {});

/// suite ∈ {golden, identity, continuation, all}; throws InvalidArgument otherwise.
std::vector<PropertyReport> run_suite(const std::string& suite, const SuiteOptions& opt = {});

bool all_passed(const std::vector<PropertyReport>& reports);

/// {suite, manifest, cases:[{name, params, deviation, tol, passed, status}], passed}
std::string to_json(const std::string& suite, const std::vector<PropertyReport>& reports);
std::string to_table(const std::vector<PropertyReport>& reports);

}  // namespace abcalc::verify
