/*
 * accelrad - excitation probabilities of an atom-mirror system
 * with two scalar photons and a relative acceleration.
 *
 * Apache License 2.0
 */
#include "accelrad/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "accelrad/special.hpp"

namespace accelrad::closedform {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn10 = 2.30258509299404568402;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Probability assembled as (prefactor * amplitude)^2 with the log10 value
// kept consistent: value underflow leaves log10 finite plus a warning.
void fill_value_and_log10(ProbabilityResult& r, double log_pref,
                          double log_amp_sq, bool amp_zero, bool g_zero) {
    if (g_zero || amp_zero) {
        r.value = 0.0;
        r.log10_value = kNegInf;
        return;
    }
    const double l10 = (log_pref + log_amp_sq) / kLn10;
    r.log10_value = l10;
    if (l10 > -307.0) {
        r.value = std::pow(10.0, l10);
    } else {
        r.value = 0.0;
        r.warnings.push_back(warn::kUnderflow);
    }
}

double sq(double x) { return x * x; }

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::atom_closed: return "atom_closed";
        case Method::mirror_exact: return "mirror_exact";
        case Method::mirror_taylor: return "mirror_taylor";
        case Method::mirror_small_beta: return "mirror_small_beta";
        case Method::atom_swapped: return "atom_swapped";
        case Method::mirror_swapped: return "mirror_swapped";
        case Method::oracle: return "oracle";
    }
    return "?";
}

bool ProbabilityResult::has_warning(const char* flag) const {
    return std::find(warnings.begin(), warnings.end(), flag) != warnings.end();
}

double theta_atom(const DimensionlessGroups& gr) {
    return 2.0 * gr.phi_z - gr.alpha * std::log(1.0 / (2.0 * gr.beta)) -
           special::gamma_imag_axis(gr.alpha).argument;
}

double theta_mirror(const DimensionlessGroups& gr) {
    return gr.psi_z - 2.0 * gr.beta * std::log(1.0 / gr.alpha) -
           special::gamma_imag_axis(2.0 * gr.beta).argument;
}

PhaseAngles phase_angles(const DimensionlessGroups& gr) {
    PhaseAngles a;
    a.theta = theta_atom(gr);
    a.theta_prime = theta_mirror(gr);
    const DimensionlessGroups sw = swap_to_half_omega(gr);
    a.theta_bar = theta_atom(sw);
    a.theta_dprime = theta_mirror(sw);
    return a;
}

BfValue b_f(const DimensionlessGroups& gr) {
    const Complex half_ib(0.0, 0.5 * gr.beta);
    const Complex a1 = 0.5 + half_ib;
    const Complex a2 = 1.0 + half_ib;
    const Complex a3 = 1.5 + half_ib;
    const double z = -gr.psi_z * gr.psi_z;
    const Complex f1 = special::hyp2f3(a1, a2, 0.5, 1.0, 1.5, z);
    const Complex f2 = special::hyp2f3(a2, a3, 1.5, 1.5, 2.0, z);
    BfValue out;
    out.value = f1 + Complex(0.0, gr.psi_z) * (Complex(1.0, gr.beta)) * f2;
    out.zeta = std::arg(out.value);
    out.modulus = std::abs(out.value);
    return out;
}

double planck_factor(double exponent) {
    if (exponent > 709.0) return std::exp(-exponent);
    return 1.0 / std::expm1(exponent);
}

double log_planck_factor(double exponent) {
    return -(exponent + std::log1p(-std::exp(-exponent)));
}

// --- atom case -------------------------------------------------------------

AtomPartials atom_partial_amplitudes(const DimensionlessGroups& gr) {
    const auto gam = special::gamma_imag_axis(gr.alpha);
    const double K = special::bessel_k_imag_order(gr.alpha, 2.0 * gr.beta);
    AtomPartials out;
    // e^{-pi a/2} |Gamma| folded into one exponential to postpone underflow
    out.i12 = 2.0 * std::exp(-0.5 * kPi * gr.alpha + gam.log_modulus) *
              std::cos(theta_atom(gr));
    out.i3 = -4.0 * std::exp(-0.5 * kPi * gr.alpha) * K;
    return out;
}

double atom_probability_core(const DimensionlessGroups& gr) {
    const AtomPartials p = atom_partial_amplitudes(gr);
    return sq(p.i12 + p.i3);
}

namespace {

struct AtomPieces {
    double theta, cos_theta;
    double gamma_mod, gamma_logmod;
    double K;
    double X;  // |Gamma| cos(theta) - 2 K
};

AtomPieces atom_pieces(const DimensionlessGroups& gr, ProbabilityResult& r) {
    AtomPieces ap;
    if (std::abs(gr.alpha * std::log(1.0 / (2.0 * gr.beta))) > 1e8)
        r.warnings.push_back(warn::kThetaPrecision);
    if (gr.alpha > 20.0) r.warnings.push_back(warn::kBesselOrderLarge);
    const auto gam = special::gamma_imag_axis(gr.alpha);
    ap.theta = theta_atom(gr);
    ap.cos_theta = std::cos(ap.theta);
    ap.gamma_mod = gam.modulus;
    ap.gamma_logmod = gam.log_modulus;
    ap.K = special::bessel_k_imag_order(gr.alpha, 2.0 * gr.beta);
    ap.X = ap.gamma_mod * ap.cos_theta - 2.0 * ap.K;
    return ap;
}

}  // namespace

ProbabilityResult p_exc_atom(const PhysicalParams& p) {
    const PhysicalParams v = validate(p);
    const DimensionlessGroups gr = reduce(v);
    ProbabilityResult r;
    r.method = Method::atom_closed;
    r.angles = phase_angles(gr);
    r.planck_factor = planck_factor(2.0 * kPi * gr.alpha);
    const AtomPieces ap = atom_pieces(gr, r);
    r.extras["gamma_mod"] = ap.gamma_mod;
    r.extras["bessel_k"] = ap.K;
    r.extras["amp_bracket"] = ap.X;

    const double exponent = kPi * gr.alpha;
    const double gscale = v.g * v.c / v.a;
    if (exponent <= 200.0) {
        r.value = sq(gscale) * 4.0 * std::exp(-exponent) * sq(ap.X);
        r.log10_value = r.value > 0.0 ? std::log10(r.value) : kNegInf;
        return r;
    }
    // log-space assembly
    double log_abs_x;
    if (ap.X != 0.0 && std::abs(ap.X) > 1e-290) {
        log_abs_x = std::log(std::abs(ap.X));
    } else if (ap.X == 0.0 && ap.gamma_mod == 0.0 && ap.K == 0.0) {
        // components themselves underflowed: envelope estimate
        // (the Bessel envelope equals ln|Gamma(i alpha)| and carries the
        //  e^{-pi alpha/2} suppression internally, like |Gamma| does)
        const double lg = ap.gamma_logmod + std::log(std::abs(ap.cos_theta));
        const double lk = std::log(2.0) +
                          special::bessel_k_imag_order_log_envelope(gr.alpha, 2.0 * gr.beta);
        log_abs_x = std::max(lg, lk);
        r.warnings.push_back(warn::kLog10Estimated);
    } else {
        log_abs_x = kNegInf;  // true zero of the bracket
    }
    const bool g_zero = (v.g == 0.0);
    const double log_pref = g_zero ? kNegInf : 2.0 * std::log(gscale);
    fill_value_and_log10(r, log_pref + std::log(4.0),
                         -exponent + 2.0 * log_abs_x,
                         !std::isfinite(log_abs_x), g_zero);
    return r;
}

// --- mirror case ------------------------------------------------------------

MirrorPartials mirror_partial_amplitudes(const DimensionlessGroups& gr) {
    const auto gam2 = special::gamma_imag_axis(2.0 * gr.beta);
    const BfValue bf = b_f(gr);
    MirrorPartials out;
    out.i12 = -4.0 * gr.beta * std::exp(-kPi * gr.beta + gam2.log_modulus) *
              std::cos(theta_mirror(gr));
    const double s3mag = 4.0 * kPi * gr.beta * gr.psi_z *
                         std::exp(-special::log_sinh(kPi * gr.beta));
    out.i3 = -s3mag * std::polar(1.0, -gr.psi_z) * bf.value;
    return out;
}

double mirror_exact_probability_core(const DimensionlessGroups& gr) {
    const MirrorPartials p = mirror_partial_amplitudes(gr);
    return std::norm(p.i12 + p.i3);
}

ProbabilityResult p_exc_mirror_exact(const PhysicalParams& p) {
    const PhysicalParams v = validate(p);
    const DimensionlessGroups gr = reduce(v);
    ProbabilityResult r;
    r.method = Method::mirror_exact;
    r.angles = phase_angles(gr);
    r.planck_factor = planck_factor(4.0 * kPi * gr.beta);
    if (std::abs(2.0 * gr.beta * std::log(1.0 / gr.alpha)) > 1e8)
        r.warnings.push_back(warn::kThetaPrecision);

    const BfValue bf = b_f(gr);
    r.extras["bf_mod"] = bf.modulus;
    r.extras["bf_zeta"] = bf.zeta;
    // chi = sqrt(2 pi b sinh(2 pi b)), reported in log space past beta = 50
    const double log_chi =
        0.5 * (std::log(2.0 * kPi * gr.beta) + special::log_sinh(2.0 * kPi * gr.beta));
    r.extras["log_chi"] = log_chi;
    if (gr.beta <= 50.0) r.extras["chi"] = std::exp(log_chi);

    const MirrorPartials parts = mirror_partial_amplitudes(gr);
    r.extras["amp_i12"] = parts.i12;
    r.extras["amp_i3_re"] = parts.i3.real();
    r.extras["amp_i3_im"] = parts.i3.imag();
    const Complex S = parts.i12 + parts.i3;
    const double abs_s = std::hypot(S.real(), S.imag());
    const double gscale = v.g / v.omega;
    const bool g_zero = (v.g == 0.0);

    if (abs_s > 1e-290) {
        r.value = sq(gscale) * sq(abs_s);
        if (r.value == 0.0 && !g_zero) {
            fill_value_and_log10(r, 2.0 * std::log(gscale), 2.0 * std::log(abs_s),
                                 false, g_zero);
        } else {
            r.log10_value = r.value > 0.0 ? std::log10(r.value) : kNegInf;
        }
        return r;
    }
    // both partials out of linear range: log-space envelope of the larger
    const auto gam2 = special::gamma_imag_axis(2.0 * gr.beta);
    const double l12 = std::log(4.0 * gr.beta) - kPi * gr.beta + gam2.log_modulus +
                       std::log(std::abs(std::cos(theta_mirror(gr))));
    const double l3 = std::log(4.0 * kPi * gr.beta * gr.psi_z) -
                      special::log_sinh(kPi * gr.beta) + std::log(bf.modulus);
    const double log_abs_s = std::max(l12, l3);
    if (std::abs(l12 - l3) < 2.0) r.warnings.push_back(warn::kLog10Estimated);
    fill_value_and_log10(r, g_zero ? kNegInf : 2.0 * std::log(gscale),
                         2.0 * log_abs_s, !std::isfinite(log_abs_s), g_zero);
    return r;
}

// --- mirror case, truncated finite-interval amplitude -----------------------

double mirror_taylor_probability_core(const DimensionlessGroups& gr) {
    const double beta = gr.beta;
    const double psi = gr.psi_z;
    const auto gam2 = special::gamma_imag_axis(2.0 * beta);
    const double theta_p = theta_mirror(gr);
    const double log_planck4 = log_planck_factor(4.0 * kPi * beta);
    // cos^2(theta') is absorbed into the bracket so the secant never appears
    const double r_half = std::exp(0.5 * log_planck4);
    const double b_tilde = (psi / beta) / ((1.0 + beta * beta) * gam2.modulus) *
                           std::exp(kPi * beta + 0.5 * log_planck4);
    const double t1 = std::cos(theta_p) * r_half +
                      b_tilde * (std::cos(psi) - beta * std::sin(psi));
    const double t2 = b_tilde * (beta * std::cos(psi) + std::sin(psi));
    return 16.0 * kPi * beta * (sq(t1) + sq(t2));
}

ProbabilityResult p_exc_mirror_taylor(const PhysicalParams& p) {
    const PhysicalParams v = validate(p);
    const DimensionlessGroups gr = reduce(v);
    ProbabilityResult r;
    r.method = Method::mirror_taylor;
    r.angles = phase_angles(gr);
    r.planck_factor = planck_factor(4.0 * kPi * gr.beta);
    if (2.0 * gr.psi_z >= 1.0) r.warnings.push_back(warn::kTaylorRegime);
    const double core = mirror_taylor_probability_core(gr);
    const double gscale = v.g / v.omega;
    r.value = sq(gscale) * core;
    if (r.value > 0.0) {
        r.log10_value = std::log10(r.value);
    } else if (v.g > 0.0 && core == 0.0) {
        r.log10_value = kNegInf;
    } else if (v.g > 0.0) {
        fill_value_and_log10(r, 2.0 * std::log(gscale), std::log(core), false, false);
    } else {
        r.log10_value = kNegInf;
    }
    return r;
}

// --- mirror case, nu*c/a << 1 limit ------------------------------------------

double mirror_small_beta_probability_core(const DimensionlessGroups& gr) {
    const double beta = gr.beta;
    const double psi = gr.psi_z;
    const auto gam2 = special::gamma_imag_axis(2.0 * beta);
    const double theta_p = theta_mirror(gr);
    const double d_tilde = (psi / beta) / gam2.modulus;  // D * cos(theta')
    const double m = 1.0 + 2.0 * kPi * beta * (1.0 + 1.0 / kPi) * std::sin(psi) +
                     sq(std::sin(psi));
    const double c = std::cos(theta_p);
    return 4.0 * (sq(c) + 2.0 * d_tilde * c + sq(d_tilde) * m);
}

ProbabilityResult p_exc_mirror_small_beta(const PhysicalParams& p) {
    const PhysicalParams v = validate(p);
    const DimensionlessGroups gr = reduce(v);
    ProbabilityResult r;
    r.method = Method::mirror_small_beta;
    r.angles = phase_angles(gr);
    r.planck_factor = planck_factor(4.0 * kPi * gr.beta);
    if (gr.beta > 0.1) r.warnings.push_back(warn::kSmallBetaRegime);
    const double core = mirror_small_beta_probability_core(gr);
    const double gscale = v.g / v.omega;
    r.value = sq(gscale) * std::max(core, 0.0);
    r.log10_value = r.value > 0.0 ? std::log10(r.value) : kNegInf;
    return r;
}

// --- energy-matched exchange nu = omega/2 ------------------------------------

ProbabilityResult p_exc_atom_swapped(const PhysicalParams& p) {
    PhysicalParams sw = p;
    sw.nu = 0.5 * p.omega;
    ProbabilityResult r = p_exc_atom(sw);
    r.method = Method::atom_swapped;
    return r;
}

ProbabilityResult p_exc_mirror_swapped(const PhysicalParams& p) {
    PhysicalParams sw = p;
    sw.nu = 0.5 * p.omega;
    ProbabilityResult r = p_exc_mirror_taylor(sw);
    r.method = Method::mirror_swapped;
    return r;
}

// --- expanded regression displays -------------------------------------------

double atom_display_gamma_core(const DimensionlessGroups& gr) {
    const auto gam = special::gamma_imag_axis(gr.alpha);
    const double K = special::bessel_k_imag_order(gr.alpha, 2.0 * gr.beta);
    const double th = theta_atom(gr);
    const double c = std::cos(th);
    const double bracket = 1.0 - 2.0 / c * K / gam.modulus;
    return 4.0 * std::exp(-kPi * gr.alpha) * sq(gam.modulus) * sq(c) * sq(bracket);
}

double atom_display_planck_core(const DimensionlessGroups& gr) {
    const auto gam = special::gamma_imag_axis(gr.alpha);
    const double K = special::bessel_k_imag_order(gr.alpha, 2.0 * gr.beta);
    const double th = theta_atom(gr);
    const double c = std::cos(th);
    const double sec = 1.0 / c;
    const double bracket = 1.0 - 4.0 * sec * K / gam.modulus +
                           (4.0 * gr.alpha / kPi) * sq(sec) * sq(K) *
                               std::sinh(kPi * gr.alpha);
    return (8.0 * kPi / gr.alpha) * sq(c) * planck_factor(2.0 * kPi * gr.alpha) *
           bracket;
}

double mirror_display_exact_core(const DimensionlessGroups& gr) {
    const double beta = gr.beta;
    const double psi = gr.psi_z;
    const BfValue bf = b_f(gr);
    const double chi = std::sqrt(2.0 * kPi * beta * std::sinh(2.0 * kPi * beta));
    const double th = theta_mirror(gr);
    const double sec = 1.0 / std::cos(th);
    const double denom = 1.0 - std::exp(-2.0 * kPi * beta);
    const double u = bf.modulus * chi * psi * sec / denom;
    const double bracket =
        1.0 + 4.0 * u * std::cos(bf.zeta - psi) + 4.0 * sq(u);
    return 16.0 * kPi * beta * planck_factor(4.0 * kPi * beta) * sq(std::cos(th)) *
           bracket;
}

double p_exc_atom_display_gamma(const PhysicalParams& p) {
    const PhysicalParams v = validate(p);
    return sq(v.g * v.c / v.a) * atom_display_gamma_core(reduce(v));
}

double p_exc_atom_display_planck(const PhysicalParams& p) {
    const PhysicalParams v = validate(p);
    return sq(v.g * v.c / v.a) * atom_display_planck_core(reduce(v));
}

double p_exc_mirror_display_exact(const PhysicalParams& p) {
    const PhysicalParams v = validate(p);
    return sq(v.g / v.omega) * mirror_display_exact_core(reduce(v));
}

}  // namespace accelrad::closedform
