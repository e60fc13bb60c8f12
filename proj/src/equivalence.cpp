/*
 * accelrad - excitation probabilities of an atom-mirror system
 * with two scalar photons and a relative acceleration.
 *
 * Apache License 2.0
 */
#include "accelrad/equivalence.hpp"

#include <cmath>

#include "accelrad/oracle.hpp"
#include "accelrad/special.hpp"

namespace accelrad::equivalence {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool close_rel(double a, double b, double tol) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return true;
    return std::abs(a - b) <= tol * scale;
}

// The shared Planck prefactor (8 pi g^2 c / (a omega)) / (e^{2 pi omega c/a} - 1),
// in log space, reached through each side's own algebraic route.
double log_planck_prefactor_atom(const PhysicalParams& v) {
    // 4 g^2 c^2/a^2 e^{-pi alpha} |Gamma(i alpha)|^2
    const double alpha = v.omega * v.c / v.a;
    const auto gam = special::gamma_imag_axis(alpha);
    return std::log(4.0) + 2.0 * std::log(v.g * v.c / v.a) - kPi * alpha +
           2.0 * gam.log_modulus;
}

double log_planck_prefactor_mirror(const PhysicalParams& v) {
    // 16 pi g^2 nu c / (a omega^2) / (e^{4 pi nu c/a} - 1) at nu = omega/2
    const double beta = 0.5 * v.omega * v.c / v.a;
    return std::log(16.0 * kPi) + 2.0 * std::log(v.g / v.omega) +
           std::log(beta) + closedform::log_planck_factor(4.0 * kPi * beta);
}

}  // namespace

double rel_difference(double p1, double p2) {
    const double m = std::max(p1, p2);
    if (m == 0.0) return 0.0;
    return std::abs(p1 - p2) / m;
}

EquivalenceReport nonequivalence_report(const PhysicalParams& p) {
    PhysicalParams v = validate(p);
    v.nu = 0.5 * v.omega;
    EquivalenceReport rep;
    rep.p_atom_swapped = closedform::p_exc_atom_swapped(v);
    rep.p_mirror_swapped = closedform::p_exc_mirror_swapped(v);
    rep.p_mirror_exact_swapped = closedform::p_exc_mirror_exact(v);
    rep.p_mirror_exact_swapped.method = closedform::Method::mirror_swapped;
    rep.rel_difference =
        rel_difference(rep.p_atom_swapped.value, rep.p_mirror_exact_swapped.value);

    const auto& ang = rep.p_atom_swapped.angles;
    rep.angle_match = close_rel(ang.theta_bar, ang.theta_dprime, 1e-13) ||
                      std::abs(ang.theta_bar - ang.theta_dprime) < 1e-13;

    const double la = log_planck_prefactor_atom(v);
    const double lm = log_planck_prefactor_mirror(v);
    rep.planck_atom = std::exp(la);
    rep.planck_mirror = std::exp(lm);
    rep.planck_match = std::abs(la - lm) <= 1e-12 * std::max(1.0, std::abs(la));
    return rep;
}

ControlReport single_photon_control(const PhysicalParams& p) {
    // measured at the exchange-symmetric point nu = omega, where the
    // frequency exchange maps the two configurations into each other
    PhysicalParams v = validate(p);
    v.nu = v.omega;
    ControlReport rep;
    if (v.g == 0.0) {
        rep.rel_difference = 0.0;
        rep.angle_match = true;
        rep.planck_match = true;
        return rep;
    }
    rep.p_atom = oracle::p_single_atom_oracle(v);
    rep.p_mirror = oracle::p_single_mirror_oracle(v);
    rep.rel_difference = rel_difference(rep.p_atom, rep.p_mirror);

    const DimensionlessGroups gr = reduce(v);
    // single-photon oscillation phases of the two sides
    rep.theta_atom = gr.phi_z - gr.alpha * std::log(1.0 / gr.beta) -
                     special::gamma_imag_axis(gr.alpha).argument;
    rep.theta_mirror = gr.psi_z - gr.beta * std::log(1.0 / gr.alpha) -
                       special::gamma_imag_axis(gr.beta).argument;
    rep.angle_match = close_rel(rep.theta_atom, rep.theta_mirror, 1e-12);

    rep.planck_atom = closedform::planck_factor(2.0 * kPi * gr.alpha);
    rep.planck_mirror = closedform::planck_factor(2.0 * kPi * gr.beta);
    rep.planck_match = close_rel(rep.planck_atom, rep.planck_mirror, 1e-12);
    return rep;
}

std::vector<SweepPoint> sweep_nonequivalence(const PhysicalParams& p,
                                             const std::vector<double>& omega_grid,
                                             bool with_control) {
    std::vector<SweepPoint> out;
    out.reserve(omega_grid.size());
    for (double w : omega_grid) {
        SweepPoint pt;
        pt.omega = w;
        PhysicalParams q = p;
        q.omega = w;
        q.nu = 0.5 * w;
        try {
            pt.report = nonequivalence_report(q);
            if (with_control) pt.control = single_photon_control(q);
        } catch (const Error& e) {
            pt.error = e.what();
        }
        out.push_back(std::move(pt));
    }
    return out;
}

std::vector<double> default_omega_grid() {
    // 10 log-spaced points, alpha = omega c/a in [0.03, 3] for the a = 1e15,
    // c = 3e8 reference configuration
    std::vector<double> grid;
    const double lo = std::log(1e5);
    const double hi = std::log(1e7);
    for (int i = 0; i < 10; ++i)
        grid.push_back(std::exp(lo + (hi - lo) * double(i) / 9.0));
    return grid;
}

}  // namespace accelrad::equivalence
