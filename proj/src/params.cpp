/*
 * accelrad - excitation probabilities of an atom-mirror system
 * with two scalar photons and a relative acceleration.
 *
 * Apache License 2.0
 */
#include "accelrad/params.hpp"

#include <cmath>
#include <sstream>

namespace accelrad {

namespace {

void require_positive(double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0) {
        std::ostringstream os;
        os << name << " must be positive and finite, got " << v;
        throw NonPositiveInput(os.str());
    }
}

void require_nonnegative(double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0) {
        std::ostringstream os;
        os << name << " must be non-negative and finite, got " << v;
        throw NonPositiveInput(os.str());
    }
}

}  // namespace

PhysicalParams validate(const PhysicalParams& raw) {
    require_positive(raw.a, "a");
    require_positive(raw.nu, "nu");
    require_positive(raw.omega, "omega");
    require_positive(raw.c, "c");
    require_nonnegative(raw.g, "g");
    require_nonnegative(raw.z0, "z0");
    const double wedge = raw.c * raw.c / raw.a;
    if (!(raw.z0 < wedge)) {
        std::ostringstream os;
        os << "z0 = " << raw.z0 << " m lies outside the Rindler wedge, needs z0 < c^2/a = "
           << wedge << " m";
        throw WedgeViolation(os.str());
    }
    return raw;
}

DimensionlessGroups reduce(const PhysicalParams& p) {
    DimensionlessGroups gr;
    gr.alpha = p.omega * p.c / p.a;
    gr.beta = p.nu * p.c / p.a;
    gr.phi_z = p.nu * p.z0 / p.c;
    gr.psi_z = p.omega * p.z0 / p.c;
    return gr;
}

DimensionlessGroups swap_to_half_omega(const DimensionlessGroups& gr) {
    DimensionlessGroups out;
    out.alpha = gr.alpha;
    out.beta = 0.5 * gr.alpha;
    out.phi_z = 0.5 * gr.psi_z;
    out.psi_z = gr.psi_z;
    return out;
}

}  // namespace accelrad
