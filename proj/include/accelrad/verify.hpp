/*
 * accelrad - excitation probabilities of an atom-mirror system
 * with two scalar photons and a relative acceleration.
 *
 * Apache License 2.0
 */
#pragma once

#include <map>
#include <string>
#include <vector>

namespace accelrad::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    double measured = 0.0;   // worst observed deviation (or count)
    double threshold = 0.0;  // tolerance it was held against
    std::string detail;
};

using Tolerances = std::map<std::string, double>;

// Per-module invariant suites. Each check looks up its tolerance override
// by name in `tol` and falls back to the pinned default.
std::vector<CheckResult> verify_special(const Tolerances& tol = {});
std::vector<CheckResult> verify_integrals(const Tolerances& tol = {});
std::vector<CheckResult> verify_figures(const Tolerances& tol = {});
std::vector<CheckResult> verify_equivalence(const Tolerances& tol = {});

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace accelrad::verify
