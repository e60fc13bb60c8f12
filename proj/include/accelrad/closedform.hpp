/*
 * accelrad - excitation probabilities of an atom-mirror system
 * with two scalar photons and a relative acceleration.
 *
 * Apache License 2.0
 */
#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "accelrad/params.hpp"

namespace accelrad::closedform {

using Complex = std::complex<double>;

enum class Method {
    atom_closed,
    mirror_exact,
    mirror_taylor,
    mirror_small_beta,
    atom_swapped,
    mirror_swapped,
    oracle,
};

const char* method_name(Method m);

// The four oscillation phases. theta/theta_prime belong to the configuration
// as given; theta_bar/theta_dprime are the same two phases at the
// energy-matched exchange nu = omega/2 and coincide symbol-for-symbol.
struct PhaseAngles {
    double theta = 0.0;         // atom case
    double theta_prime = 0.0;   // mirror case
    double theta_bar = 0.0;     // atom case at nu = omega/2
    double theta_dprime = 0.0;  // mirror case at nu = omega/2
};

// The complex 2F3 combination carried by the finite-interval mirror
// amplitude, B_f = |B_f| e^{i zeta}.
struct BfValue {
    Complex value{1.0, 0.0};
    double zeta = 0.0;
    double modulus = 1.0;
};

// Numeric-health flags attached to a ProbabilityResult.
namespace warn {
inline constexpr const char* kUnderflow = "underflow";
inline constexpr const char* kLog10Estimated = "log10-estimated";
inline constexpr const char* kThetaPrecision = "theta-precision";
inline constexpr const char* kTaylorRegime = "taylor-outside-regime";
inline constexpr const char* kSmallBetaRegime = "small-beta-outside-regime";
inline constexpr const char* kBesselOrderLarge = "bessel-order-large";
}  // namespace warn

struct ProbabilityResult {
    double value = 0.0;        // dimensionless probability, >= 0
    double log10_value = 0.0;  // -inf when value == 0 and nothing underflowed
    Method method = Method::atom_closed;
    PhaseAngles angles;
    double planck_factor = 0.0;  // the 1/(e^{..}-1) factor of the Planck form
    std::vector<std::string> warnings;
    std::map<std::string, double> extras;  // chi, |B_f|, zeta, partial sums, ...

    bool has_warning(const char* flag) const;
};

// Phase angles.
//   theta  = 2*phi_z - alpha*ln(1/(2*beta)) - arg Gamma(i*alpha)
//   theta' = psi_z - 2*beta*ln(1/alpha) - arg Gamma(2i*beta)
double theta_atom(const DimensionlessGroups& gr);
double theta_mirror(const DimensionlessGroups& gr);
PhaseAngles phase_angles(const DimensionlessGroups& gr);

// B_f = 2F3(a1,a2; 1/2,1,3/2; -psi_z^2)
//       + i*psi_z*(1+i*beta) * 2F3(a2,a3; 3/2,3/2,2; -psi_z^2)
// with a1 = 1/2 + i*beta/2, a2 = 1 + i*beta/2, a3 = 3/2 + i*beta/2.
BfValue b_f(const DimensionlessGroups& gr);

// --- probabilities -------------------------------------------------------
//
// Authoritative-value rule: every probability below is assembled from the
// closed-form partial amplitudes as g^2 |sum I|^2. The fully expanded
// secant displays further down are regression targets only.

ProbabilityResult p_exc_atom(const PhysicalParams& p);
ProbabilityResult p_exc_mirror_exact(const PhysicalParams& p);
ProbabilityResult p_exc_mirror_taylor(const PhysicalParams& p);
ProbabilityResult p_exc_mirror_small_beta(const PhysicalParams& p);
// nu is ignored by the swapped variants; nu := omega/2 internally.
ProbabilityResult p_exc_atom_swapped(const PhysicalParams& p);
ProbabilityResult p_exc_mirror_swapped(const PhysicalParams& p);

// Group-level cores, P divided by the dimensionful prefactor:
//   atom:   P = (g*c/a)^2 * atom_probability_core(gr)
//   mirror: P = (g/omega)^2 * mirror_*_probability_core(gr)
// These let verification grids span dimensionless space directly.
double atom_probability_core(const DimensionlessGroups& gr);
double mirror_exact_probability_core(const DimensionlessGroups& gr);
double mirror_taylor_probability_core(const DimensionlessGroups& gr);
double mirror_small_beta_probability_core(const DimensionlessGroups& gr);

// Dimensionless partial amplitudes of the assemblies (atom partials in units
// of c/a, mirror partials multiplied by omega).
struct AtomPartials {
    double i12 = 0.0;  //  2 e^{-pi*alpha/2} |Gamma(i alpha)| cos theta
    double i3 = 0.0;   // -4 e^{-pi*alpha/2} K_{i alpha}(2 beta)
};
struct MirrorPartials {
    double i12 = 0.0;       // -4 beta e^{-pi*beta} |Gamma(2i beta)| cos theta'
    Complex i3{0.0, 0.0};   // -4 pi beta psi_z / sinh(pi beta) e^{-i psi_z} B_f
};
AtomPartials atom_partial_amplitudes(const DimensionlessGroups& gr);
MirrorPartials mirror_partial_amplitudes(const DimensionlessGroups& gr);

// Planck factor 1/(e^x - 1) and its natural log, overflow/underflow safe.
double planck_factor(double exponent);
double log_planck_factor(double exponent);

// --- expanded regression displays (fragile near cos theta = 0) -----------

// Atom case as |Gamma|^2 cos^2 expansion and as Planck expansion; the two
// agree through |Gamma(iy)|^2 = pi/(y sinh(pi y)).
double p_exc_atom_display_gamma(const PhysicalParams& p);
double p_exc_atom_display_planck(const PhysicalParams& p);
// Mirror case exact display with chi = sqrt(2 pi beta sinh(2 pi beta)) and
// the cos(zeta - psi_z) cross term.
double p_exc_mirror_display_exact(const PhysicalParams& p);

double atom_display_gamma_core(const DimensionlessGroups& gr);
double atom_display_planck_core(const DimensionlessGroups& gr);
double mirror_display_exact_core(const DimensionlessGroups& gr);

}  // namespace accelrad::closedform
