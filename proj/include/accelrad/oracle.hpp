/*
 * accelrad - excitation probabilities of an atom-mirror system
 * with two scalar photons and a relative acceleration.
 *
 * Apache License 2.0
 */
#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "accelrad/closedform.hpp"
#include "accelrad/params.hpp"

namespace accelrad::oracle {

using Complex = std::complex<double>;

// Diagnostics of one regularized quadrature.
struct QuadratureReport {
    Complex value{0.0, 0.0};
    double abs_error_estimate = 0.0;
    long evaluations = 0;
    std::string method;
    // (epsilon, damped value) ladder actually used for the extrapolation;
    // empty for single-shot finite-interval quadratures.
    std::vector<std::pair<double, Complex>> epsilon_trace;
};

enum class PhaseIntegralKind { gamma_type, bessel_type };

// Hyperbolic trajectory t = (c/a) sinh(a tau / c), z = (c^2/a) cosh(a tau / c).
// Throws DomainError when |a*tau/c| > 700.
std::pair<double, double> trajectory(double tau, double a, double c);

// Standing-wave mode vanishing at z0:
//   exp(-i nu t - i k (z - z0)) - exp(-i nu t + i k (z - z0)),  k = nu/c.
Complex mode_standing_wave(double nu, double t, double z, double z0, double c);

// Mode of the accelerated-mirror configuration in Minkowski coordinates:
//   exp(+i (nu c/a) ln[(a/c^2)(z - c t)]) Theta(z - c t)
// - exp(-i (nu c/a) ln[(a/c^2)(z + c t)]) Theta(z + c t),   Theta(0) := 1/2.
Complex mode_rindler_in_minkowski(double nu, double t, double z, double a, double c);

// Regularized improper oscillatory integrals, evaluated on an epsilon ladder
// and Richardson-extrapolated to epsilon -> 0 (polynomial order = ladder
// length - 1; the ladder extends adaptively while the residual target is
// unmet). Raises NoConvergence when the extrapolation residual exceeds
// 1e-3 * |value| or the residuals fail to shrink along the ladder.
//
//   gamma_type:  int_0^inf e^{i sgn(s) x} x^{i s - 1} dx, damper e^{-eps x}.
//                One exact integration by parts moves the integrand to the
//                absolutely integrable power x^{i s} before quadrature; the
//                boundary term at 0 carries the continuation convention
//                lim_{x->0} x^{i s} := 0.
//   bessel_type: int_0^inf x^{i s - 1} e^{i q (x - 1/x)} dx, q > 0,
//                damper e^{-eps (x + 1/x)}; the ladder is scaled by q when
//                q < 0.8 so all nodes stay inside the analyticity radius.
QuadratureReport improper_phase_integral(double s_im, PhaseIntegralKind kind,
                                         double q = 0.0,
                                         std::vector<double> eps_ladder = {});

// Same regularization for the power form that the coordinate-time amplitudes
// reduce to:  int_0^inf x^{i s} e^{i phase_sign x} dx.
QuadratureReport improper_power_phase_integral(double s_im, int phase_sign,
                                               std::vector<double> eps_ladder = {});

// Finite-interval amplitude with log-phase endpoint singularities, evaluated
// by tanh-sinh quadrature. Returns omega * I3' (dimensionless):
//   -2 e^{-i psi} (2 psi)^{-i beta} int_0^{2 psi} e^{i x} x^{i beta}
//                                     (1 - x/(2 psi))^{-i beta} dx.
QuadratureReport finite_log_phase_integral(double beta, double psi_z);

// Secondary cross-check of the gamma-type value e^{-pi s/2} Gamma(i s) by
// contour rotation x -> i u (series + quadrature split; no Lanczos involved).
Complex gamma_phase_integral_rotated(double s_im);

// The three partial amplitudes of one configuration, in seconds.
struct AmplitudeBreakdown {
    Complex i1{0.0, 0.0};
    Complex i2{0.0, 0.0};
    Complex i3{0.0, 0.0};
    Complex total{0.0, 0.0};
    // (epsilon, i1(eps)+i2(eps)) pairs of the shared improper-pair ladder.
    std::vector<std::pair<double, Complex>> epsilon_trace;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
};

AmplitudeBreakdown atom_amplitudes(const PhysicalParams& p);
AmplitudeBreakdown mirror_amplitudes(const PhysicalParams& p);

closedform::ProbabilityResult p_exc_atom_oracle(const PhysicalParams& p);
closedform::ProbabilityResult p_exc_mirror_oracle(const PhysicalParams& p);

// Group-level cores matching closedform::*_probability_core.
double atom_oracle_core(const DimensionlessGroups& gr);
double mirror_oracle_core(const DimensionlessGroups& gr);
// Dimensionless mirror improper pair omega*(I1'+I2') for partial checks.
Complex mirror_improper_pair_core(const DimensionlessGroups& gr);

// Single-photon pipelines (equivalence control): one mode factor, halved
// phase doubling, no cross amplitude.
//   atom:   g^2 |I1~ - I2~|^2,  mirror: g^2 |J1 - J2|^2.
double p_single_atom_oracle(const PhysicalParams& p);
double p_single_mirror_oracle(const PhysicalParams& p);

}  // namespace accelrad::oracle
