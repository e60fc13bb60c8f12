/*
 * accelrad - excitation probabilities of an atom-mirror system
 * with two scalar photons and a relative acceleration.
 *
 * Apache License 2.0
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "accelrad/closedform.hpp"
#include "accelrad/params.hpp"

namespace accelrad::equivalence {

// Dual-photon comparison at the energy-matched exchange nu = omega/2.
// rel_difference is computed from the authoritative amplitude assemblies
// (atom closed form vs mirror exact form); the Taylor-family value rides
// along as a diagnostic.
struct EquivalenceReport {
    closedform::ProbabilityResult p_atom_swapped;
    closedform::ProbabilityResult p_mirror_swapped;        // Taylor family
    closedform::ProbabilityResult p_mirror_exact_swapped;  // exact family
    double rel_difference = 0.0;  // |P - P'| / max(P, P'), both-zero -> 0
    bool angle_match = false;     // theta_bar == theta_dprime to roundoff
    bool planck_match = false;    // shared (8 pi g^2 c / (a omega)) / (e^{2 pi omega c/a} - 1)
    double planck_atom = 0.0;
    double planck_mirror = 0.0;
};

// Single-photon control at the exchange-symmetric point nu = omega, where
// the frequency exchange maps the two configurations into each other. Both
// sides run through the oracle quadrature pipelines; their agreement (or
// measured discrepancy) is reported, never assumed.
struct ControlReport {
    double p_atom = 0.0;
    double p_mirror = 0.0;
    double rel_difference = 0.0;
    double theta_atom = 0.0;    // single-photon oscillation phases
    double theta_mirror = 0.0;  // equal after the exchange
    bool angle_match = false;
    double planck_atom = 0.0;
    double planck_mirror = 0.0;
    bool planck_match = false;
};

double rel_difference(double p1, double p2);

// nu in p is ignored: both sides are evaluated at nu = omega/2.
EquivalenceReport nonequivalence_report(const PhysicalParams& p);

// nu in p is ignored: the control runs at nu = omega.
ControlReport single_photon_control(const PhysicalParams& p);

struct SweepPoint {
    double omega = 0.0;
    std::optional<EquivalenceReport> report;
    std::optional<ControlReport> control;
    std::string error;  // non-empty when this point failed
};

// One report per omega, deterministic order; per-point errors are attached
// and the sweep continues.
std::vector<SweepPoint> sweep_nonequivalence(const PhysicalParams& p,
                                             const std::vector<double>& omega_grid,
                                             bool with_control = true);

// The documented 10-point omega grid used by the verification suite.
std::vector<double> default_omega_grid();

}  // namespace accelrad::equivalence
