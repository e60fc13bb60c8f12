/*
 * accelrad - excitation probabilities of an atom-mirror system
 * with two scalar photons and a relative acceleration.
 *
 * Apache License 2.0
 */
#pragma once

#include "accelrad/errors.hpp"

namespace accelrad {

inline constexpr double kSpeedOfLightSI = 299792458.0;  // m/s, exact SI value
inline constexpr double kSpeedOfLightRounded = 3.0e8;   // m/s, value pinned by the presets

// One physical configuration, SI units throughout.
//
// Units policy: nu and omega are ANGULAR frequencies (rad/s). All phases are
// assembled as exp(i*nu*t) and exp(i*omega*tau) without 2*pi factors, so the
// preset numerals (nu ~ 1e4, omega ~ 1e9, ...) are consumed as rad/s.
struct PhysicalParams {
    double a = 0.0;      // proper acceleration, m/s^2
    double nu = 0.0;     // photon angular frequency, rad/s
    double omega = 0.0;  // atomic transition angular frequency, rad/s
    double z0 = 0.0;     // fixed position of the mirror (or atom), m
    double g = 0.0;      // effective coupling g_eff = g*sqrt(N), rad/s; g = 0 allowed
    double c = kSpeedOfLightSI;  // m/s; presets override to 3e8
};

// The four dimensionless combinations every probability formula depends on.
// Consistency: alpha*phi_z == beta*psi_z (both equal omega*nu*z0/a).
struct DimensionlessGroups {
    double alpha = 0.0;  // omega*c/a
    double beta = 0.0;   // nu*c/a
    double phi_z = 0.0;  // nu*z0/c
    double psi_z = 0.0;  // omega*z0/c
};

// Returns the input unchanged iff all invariants hold.
// Throws NonPositiveInput for non-positive (or non-finite) a, nu, omega, c,
// negative g or z0, and WedgeViolation when z0 >= c^2/a.
PhysicalParams validate(const PhysicalParams& raw);

// Reduction to the dimensionless groups. Expects validated params.
DimensionlessGroups reduce(const PhysicalParams& p);

// Groups of the energy-matched exchange nu := omega/2 of the same params.
DimensionlessGroups swap_to_half_omega(const DimensionlessGroups& gr);

}  // namespace accelrad
