/*
 * accelrad - excitation probabilities of an atom-mirror system
 * with two scalar photons and a relative acceleration.
 *
 * Apache License 2.0
 */
#include "accelrad/oracle.hpp"

#include <cmath>
#include <sstream>

#include "accelrad/quadrature.hpp"
#include "accelrad/special.hpp"

namespace accelrad::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDampTailLog = 45.0;   // e^{-45} ~ 2.9e-20 relative tail
constexpr long kEvalBudgetPerEps = 200000;
constexpr double kResidualTarget = 1e-7;   // internal extrapolation quality
constexpr double kResidualCeiling = 1e-3;  // NoConvergence threshold
constexpr std::size_t kMaxLadder = 11;

const std::vector<double> kDefaultGammaLadder = {0.2,    0.1,     0.05,   0.025,
                                                 0.0125, 0.00625, 0.003125};
const std::vector<double> kDefaultBesselLadder = {0.2,   0.1,    0.05,
                                                  0.025, 0.0125, 0.00625};

struct DampedEval {
    Complex value{0.0, 0.0};
    double abs_error = 0.0;
    long evaluations = 0;
};

// int_0^inf x^{i s} e^{(i sign - eps) x} dx.
// Absolutely integrable at 0; the head [0, 0.25] is summed analytically from
// the entire-series expansion of the exponential, the body by adaptive
// Gauss-Kronrod over dyadic panels, and the damped tail beyond 45/eps is
// bounded and discarded.
DampedEval damped_power_phase(double s, int sign, double eps) {
    DampedEval out;
    const Complex w(-eps, double(sign));
    const double x_min = 0.25;

    // analytic head
    Complex head(0.0, 0.0);
    Complex ck(x_min, 0.0);  // w^k x_min^{k+1} / k!
    for (int k = 0; k < 60; ++k) {
        head += ck / Complex(double(k + 1), s);
        ck *= w * x_min / double(k + 1);
        if (std::abs(ck) < 1e-22) break;
    }
    head *= std::polar(1.0, s * std::log(x_min));

    // initial panels hold at most ~2 pi of phase so the Kronrod-Gauss error
    // estimate stays meaningful on the oscillation; refinement does the rest
    const double x_far = kDampTailLog / eps + 10.0;
    const std::size_t max_panels = kEvalBudgetPerEps / 15 - 8;
    std::vector<double> bp;
    bp.push_back(x_min);
    double x = x_min;
    while (x < x_far && bp.size() < max_panels) {
        const double dphi = 1.0 + std::abs(s) / x;
        x = std::min(x + 6.2832 / dphi, x_far);
        bp.push_back(x);
    }
    auto f = [&](double xx) {
        return std::polar(std::exp(-eps * xx), sign * xx + s * std::log(xx));
    };
    quad::Result body =
        quad::gk_adaptive(f, bp, 3e-17 / eps, 1e-13, kEvalBudgetPerEps);

    out.value = head + body.value;
    // tail bound: |x^{is} e^{wx}/w| at the last covered point
    out.abs_error = body.abs_error + std::exp(-eps * bp.back()) / std::abs(w);
    out.evaluations = body.evaluations;
    return out;
}

// int_{-inf}^{inf} e^{i s t} e^{2 i q sinh t} e^{-2 eps cosh t} dt
// (the bessel-type integrand after x = e^t).
DampedEval damped_bessel_phase(double s, double q, double eps) {
    DampedEval out;
    const double t_cut = std::log(kDampTailLog / eps);
    const std::size_t max_panels = kEvalBudgetPerEps / 15 - 8;
    std::vector<double> bp;
    bp.push_back(-t_cut);
    double t = -t_cut;
    while (t < t_cut && bp.size() < max_panels) {
        const double dphi = 1.0 + std::abs(s) + 2.0 * q * std::cosh(t);
        t = std::min(t + 6.2832 / dphi, t_cut);
        bp.push_back(t);
    }
    auto f = [&](double tt) {
        return std::polar(std::exp(-2.0 * eps * std::cosh(tt)),
                          s * tt + 2.0 * q * std::sinh(tt));
    };
    quad::Result body = quad::gk_adaptive(f, bp, 1e-16 * 2.0 * t_cut, 1e-13,
                                          kEvalBudgetPerEps);
    out.value = body.value;
    // damped remainder beyond the last covered panel
    out.abs_error = body.abs_error + std::exp(-2.0 * eps * std::cosh(bp.back())) /
                                         std::max(q, eps);
    out.evaluations = body.evaluations;
    return out;
}

struct Extrapolation {
    Complex value{0.0, 0.0};
    double residual = 0.0;
    std::vector<double> residual_ladder;
};

// Neville polynomial extrapolation of the ladder values to eps = 0.
Extrapolation neville_to_zero(const std::vector<std::pair<double, Complex>>& pts) {
    const std::size_t n = pts.size();
    std::vector<Complex> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = pts[i].second;
    Extrapolation out;
    Complex diag = t[0];
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i + j < n; ++i) {
            const double xi = pts[i].first;
            const double xj = pts[i + j].first;
            t[i] = (xi * t[i + 1] - xj * t[i]) / (xi - xj);
        }
        out.residual_ladder.push_back(std::abs(t[0] - diag));
        diag = t[0];
    }
    out.value = diag;
    out.residual = out.residual_ladder.empty() ? 0.0 : out.residual_ladder.back();
    return out;
}

void check_extrapolation(const Extrapolation& ex, double quad_noise,
                         const char* what) {
    const double scale = std::abs(ex.value);
    if (quad_noise > kResidualCeiling * scale) {
        std::ostringstream os;
        os << what << ": quadrature error " << quad_noise
           << " exceeds 1e-3 * |value| = " << kResidualCeiling * scale
           << " (budget-truncated oscillatory coverage)";
        throw NoConvergence(os.str());
    }
    // Residuals must shrink along the ladder once past their peak (an early
    // hump is normal for a Richardson table); growth below the quadrature
    // noise floor is a roundoff plateau, not a failure.
    const double floor = std::max(10.0 * quad_noise, 1e-9 * scale);
    std::size_t peak = 0;
    for (std::size_t j = 1; j < ex.residual_ladder.size(); ++j)
        if (ex.residual_ladder[j] >= ex.residual_ladder[peak]) peak = j;
    for (std::size_t j = peak + 2; j < ex.residual_ladder.size(); ++j) {
        const double prev = ex.residual_ladder[j - 1];
        const double cur = ex.residual_ladder[j];
        if (cur > 4.0 * prev && cur > floor) {
            std::ostringstream os;
            os << what << ": extrapolation residuals not decreasing (" << prev
               << " -> " << cur << " at |value| = " << scale << ")";
            throw NoConvergence(os.str());
        }
    }
    if (ex.residual > kResidualCeiling * scale) {
        std::ostringstream os;
        os << what << ": extrapolation residual " << ex.residual
           << " exceeds 1e-3 * |value| = " << kResidualCeiling * scale;
        throw NoConvergence(os.str());
    }
}

template <class Eval>
QuadratureReport extrapolated_report(std::vector<double> ladder, Eval&& eval,
                                     const char* what) {
    QuadratureReport rep;
    rep.method = "gauss-kronrod+richardson";
    double quad_noise = 0.0;
    for (double eps : ladder) {
        DampedEval de = eval(eps);
        rep.epsilon_trace.emplace_back(eps, de.value);
        rep.evaluations += de.evaluations;
        quad_noise = std::max(quad_noise, de.abs_error);
    }
    Extrapolation ex = neville_to_zero(rep.epsilon_trace);
    while (ex.residual > kResidualTarget * std::abs(ex.value) &&
           ex.residual > 10.0 * quad_noise && rep.epsilon_trace.size() < kMaxLadder) {
        const double eps = rep.epsilon_trace.back().first * 0.5;
        DampedEval de = eval(eps);
        rep.evaluations += de.evaluations;
        // a budget-truncated evaluation would poison the table; stop instead
        if (de.abs_error > 0.1 * std::max(ex.residual, quad_noise)) break;
        rep.epsilon_trace.emplace_back(eps, de.value);
        quad_noise = std::max(quad_noise, de.abs_error);
        ex = neville_to_zero(rep.epsilon_trace);
    }
    check_extrapolation(ex, quad_noise, what);
    rep.value = ex.value;
    rep.abs_error_estimate = std::max(ex.residual, quad_noise);
    return rep;
}

}  // namespace

std::pair<double, double> trajectory(double tau, double a, double c) {
    const double rapidity = a * tau / c;
    if (std::abs(rapidity) > 700.0)
        throw DomainError("trajectory: |a tau / c| > 700 would overflow");
    return {c / a * std::sinh(rapidity), c * c / a * std::cosh(rapidity)};
}

Complex mode_standing_wave(double nu, double t, double z, double z0, double c) {
    const double k = nu / c;
    return std::polar(1.0, -(nu * t + k * (z - z0))) -
           std::polar(1.0, -(nu * t - k * (z - z0)));
}

Complex mode_rindler_in_minkowski(double nu, double t, double z, double a, double c) {
    const double s = nu * c / a;
    const double u_ret = z - c * t;
    const double u_adv = z + c * t;
    Complex value(0.0, 0.0);
    // Theta(0) := 1/2; the phase at the null boundary is a measure-zero
    // convention and taken as 1 there.
    if (u_ret >= 0.0) {
        const double theta = (u_ret > 0.0) ? 1.0 : 0.5;
        const double phase = (u_ret > 0.0) ? s * std::log(a / (c * c) * u_ret) : 0.0;
        value += theta * std::polar(1.0, phase);
    }
    if (u_adv >= 0.0) {
        const double theta = (u_adv > 0.0) ? 1.0 : 0.5;
        const double phase = (u_adv > 0.0) ? -s * std::log(a / (c * c) * u_adv) : 0.0;
        value -= theta * std::polar(1.0, phase);
    }
    return value;
}

QuadratureReport improper_phase_integral(double s_im, PhaseIntegralKind kind,
                                         double q, std::vector<double> eps_ladder) {
    if (s_im == 0.0) throw DomainError("improper_phase_integral: s_im must be nonzero");
    if (kind == PhaseIntegralKind::gamma_type) {
        const int sign = s_im > 0.0 ? 1 : -1;
        if (eps_ladder.empty()) eps_ladder = kDefaultGammaLadder;
        const Complex is(0.0, s_im);
        auto eval = [&](double eps) {
            DampedEval de = damped_power_phase(s_im, sign, eps);
            const Complex w(-eps, double(sign));
            const Complex factor = -w / is;
            de.value *= factor;
            de.abs_error *= std::abs(factor);
            return de;
        };
        return extrapolated_report(eps_ladder, eval, "gamma_type");
    }
    if (!(q > 0.0)) throw DomainError("improper_phase_integral: bessel_type needs q > 0");
    if (eps_ladder.empty()) {
        eps_ladder = kDefaultBesselLadder;
        // keep all ladder nodes inside the analyticity radius |eps| < q
        const double scale = std::min(1.0, q / 0.8);
        for (double& e : eps_ladder) e *= scale;
    }
    auto eval = [&](double eps) { return damped_bessel_phase(s_im, q, eps); };
    return extrapolated_report(eps_ladder, eval, "bessel_type");
}

QuadratureReport improper_power_phase_integral(double s_im, int phase_sign,
                                               std::vector<double> eps_ladder) {
    if (phase_sign != 1 && phase_sign != -1)
        throw DomainError("improper_power_phase_integral: phase_sign must be +-1");
    if (eps_ladder.empty()) eps_ladder = kDefaultGammaLadder;
    auto eval = [&](double eps) { return damped_power_phase(s_im, phase_sign, eps); };
    return extrapolated_report(eps_ladder, eval, "power_phase");
}

QuadratureReport finite_log_phase_integral(double beta, double psi_z) {
    if (!(psi_z > 0.0)) throw DomainError("finite_log_phase_integral: psi_z must be > 0");
    const double b = 2.0 * psi_z;
    const double logb = std::log(b);
    auto f = [&](double x, double d_lo, double d_hi) {
        // e^{ix} x^{i beta} (1 - x/b)^{-i beta}, endpoint distances kept exact
        return std::polar(1.0, x + beta * (std::log(d_lo) - std::log(d_hi) + logb));
    };
    quad::Result ts = quad::tanh_sinh(f, 0.0, b, 1e-12, 13);
    QuadratureReport rep;
    rep.method = "tanh-sinh";
    const Complex pref = -2.0 * std::polar(1.0, -psi_z - beta * logb);
    rep.value = pref * ts.value;
    rep.abs_error_estimate = 2.0 * ts.abs_error;
    rep.evaluations = ts.evaluations;
    if (rep.abs_error_estimate > kResidualCeiling * std::abs(rep.value)) {
        std::ostringstream os;
        os << "finite_log_phase_integral: error estimate " << rep.abs_error_estimate
           << " exceeds 1e-3 * |value|";
        throw NoConvergence(os.str());
    }
    return rep;
}

Complex gamma_phase_integral_rotated(double s_im) {
    if (s_im == 0.0) throw DomainError("gamma_phase_integral_rotated: s_im nonzero");
    const double s = std::abs(s_im);
    // Gamma(is) = sum_n (-1)^n / (n! (n + is)) + int_1^inf u^{is-1} e^{-u} du
    Complex series(0.0, 0.0);
    double inv_fact = 1.0;
    for (int n = 0; n <= 25; ++n) {
        if (n > 0) inv_fact /= double(n);
        const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        series += sgn * inv_fact / Complex(double(n), s);
    }
    std::vector<double> bp = {1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 48.0};
    auto f = [&](double u) {
        return std::polar(std::exp(-u) / u, s * std::log(u));
    };
    quad::Result tail = quad::gk_adaptive(f, bp, 1e-18, 1e-14, 100000);
    Complex gamma_is = series + tail.value;
    if (s_im < 0.0) gamma_is = std::conj(gamma_is);
    return std::exp(-kPi * s / 2.0) * gamma_is;
}

// --- amplitude assemblies ---------------------------------------------------

namespace {

// dimensionless atom breakdown: I / (c/a)
AmplitudeBreakdown atom_breakdown_core(const DimensionlessGroups& gr) {
    const double alpha = gr.alpha;
    const double log_half_beta = std::log(1.0 / (2.0 * gr.beta));
    QuadratureReport r1 = improper_phase_integral(alpha, PhaseIntegralKind::gamma_type);
    QuadratureReport r2 = improper_phase_integral(-alpha, PhaseIntegralKind::gamma_type);
    QuadratureReport r3 =
        improper_phase_integral(alpha, PhaseIntegralKind::bessel_type, gr.beta);
    AmplitudeBreakdown out;
    const Complex pref1 = std::polar(1.0, alpha * log_half_beta - 2.0 * gr.phi_z);
    const Complex pref2 = std::polar(1.0, -alpha * log_half_beta + 2.0 * gr.phi_z);
    out.i1 = pref1 * r1.value;
    out.i2 = pref2 * r2.value;
    out.i3 = -2.0 * r3.value;
    out.total = out.i1 + out.i2 + out.i3;
    const std::size_t n = std::min(r1.epsilon_trace.size(), r2.epsilon_trace.size());
    for (std::size_t k = 0; k < n; ++k) {
        out.epsilon_trace.emplace_back(
            r1.epsilon_trace[k].first,
            pref1 * r1.epsilon_trace[k].second + pref2 * r2.epsilon_trace[k].second);
    }
    out.abs_error_estimate =
        r1.abs_error_estimate + r2.abs_error_estimate + 2.0 * r3.abs_error_estimate;
    out.evaluations = r1.evaluations + r2.evaluations + r3.evaluations;
    return out;
}

// dimensionless mirror breakdown: omega * I'
AmplitudeBreakdown mirror_breakdown_core(const DimensionlessGroups& gr) {
    const double two_beta = 2.0 * gr.beta;
    const double log_alpha = std::log(gr.alpha);
    QuadratureReport r1 = improper_power_phase_integral(-two_beta, -1);
    QuadratureReport r2 = improper_power_phase_integral(two_beta, 1);
    QuadratureReport r3 = finite_log_phase_integral(gr.beta, gr.psi_z);
    AmplitudeBreakdown out;
    const Complex pref1 = std::polar(1.0, gr.psi_z + two_beta * log_alpha);
    const Complex pref2 = std::polar(1.0, -gr.psi_z - two_beta * log_alpha);
    out.i1 = pref1 * r1.value;
    out.i2 = pref2 * r2.value;
    out.i3 = r3.value;
    out.total = out.i1 + out.i2 + out.i3;
    const std::size_t n = std::min(r1.epsilon_trace.size(), r2.epsilon_trace.size());
    for (std::size_t k = 0; k < n; ++k) {
        out.epsilon_trace.emplace_back(
            r1.epsilon_trace[k].first,
            pref1 * r1.epsilon_trace[k].second + pref2 * r2.epsilon_trace[k].second);
    }
    out.abs_error_estimate =
        r1.abs_error_estimate + r2.abs_error_estimate + r3.abs_error_estimate;
    out.evaluations = r1.evaluations + r2.evaluations + r3.evaluations;
    return out;
}

void scale_breakdown(AmplitudeBreakdown& b, double factor) {
    b.i1 *= factor;
    b.i2 *= factor;
    b.i3 *= factor;
    b.total *= factor;
    for (auto& [eps, v] : b.epsilon_trace) v *= factor;
    b.abs_error_estimate *= factor;
}

closedform::ProbabilityResult oracle_result(const PhysicalParams& v,
                                            const AmplitudeBreakdown& amps,
                                            double planck_exponent) {
    closedform::ProbabilityResult r;
    r.method = closedform::Method::oracle;
    const DimensionlessGroups gr = reduce(v);
    r.angles = closedform::phase_angles(gr);
    r.planck_factor = closedform::planck_factor(planck_exponent);
    r.value = v.g * v.g * std::norm(amps.total);
    r.log10_value = r.value > 0.0 ? std::log10(r.value)
                                  : -std::numeric_limits<double>::infinity();
    r.extras["abs_error_estimate"] = amps.abs_error_estimate;
    r.extras["evaluations"] = double(amps.evaluations);
    r.extras["amp_total_re"] = amps.total.real();
    r.extras["amp_total_im"] = amps.total.imag();
    return r;
}

// g = 0 zeroes the probability before any integral is needed
closedform::ProbabilityResult zero_coupling_result(const PhysicalParams& v,
                                                   double planck_exponent) {
    return oracle_result(v, AmplitudeBreakdown{}, planck_exponent);
}

}  // namespace

AmplitudeBreakdown atom_amplitudes(const PhysicalParams& p) {
    const PhysicalParams v = validate(p);
    AmplitudeBreakdown b = atom_breakdown_core(reduce(v));
    scale_breakdown(b, v.c / v.a);
    return b;
}

AmplitudeBreakdown mirror_amplitudes(const PhysicalParams& p) {
    const PhysicalParams v = validate(p);
    AmplitudeBreakdown b = mirror_breakdown_core(reduce(v));
    scale_breakdown(b, 1.0 / v.omega);
    return b;
}

closedform::ProbabilityResult p_exc_atom_oracle(const PhysicalParams& p) {
    const PhysicalParams v = validate(p);
    const DimensionlessGroups gr = reduce(v);
    if (v.g == 0.0) return zero_coupling_result(v, 2.0 * kPi * gr.alpha);
    const AmplitudeBreakdown amps = atom_amplitudes(v);
    return oracle_result(v, amps, 2.0 * kPi * gr.alpha);
}

closedform::ProbabilityResult p_exc_mirror_oracle(const PhysicalParams& p) {
    const PhysicalParams v = validate(p);
    const DimensionlessGroups gr = reduce(v);
    if (v.g == 0.0) return zero_coupling_result(v, 4.0 * kPi * gr.beta);
    const AmplitudeBreakdown amps = mirror_amplitudes(v);
    return oracle_result(v, amps, 4.0 * kPi * gr.beta);
}

double atom_oracle_core(const DimensionlessGroups& gr) {
    return std::norm(atom_breakdown_core(gr).total);
}

double mirror_oracle_core(const DimensionlessGroups& gr) {
    return std::norm(mirror_breakdown_core(gr).total);
}

Complex mirror_improper_pair_core(const DimensionlessGroups& gr) {
    const AmplitudeBreakdown b = mirror_breakdown_core(gr);
    return b.i1 + b.i2;
}

double p_single_atom_oracle(const PhysicalParams& p) {
    const PhysicalParams v = validate(p);
    if (v.g == 0.0) return 0.0;
    const DimensionlessGroups gr = reduce(v);
    const double log_inv_beta = std::log(1.0 / gr.beta);
    QuadratureReport r1 = improper_phase_integral(gr.alpha, PhaseIntegralKind::gamma_type);
    QuadratureReport r2 = improper_phase_integral(-gr.alpha, PhaseIntegralKind::gamma_type);
    const Complex i1 = std::polar(1.0, gr.alpha * log_inv_beta - gr.phi_z) * r1.value;
    const Complex i2 = std::polar(1.0, -gr.alpha * log_inv_beta + gr.phi_z) * r2.value;
    const double amp_scale = v.g * v.c / v.a;
    return amp_scale * amp_scale * std::norm(i1 - i2);
}

double p_single_mirror_oracle(const PhysicalParams& p) {
    const PhysicalParams v = validate(p);
    if (v.g == 0.0) return 0.0;
    const DimensionlessGroups gr = reduce(v);
    const double log_alpha = std::log(gr.alpha);
    QuadratureReport r1 = improper_power_phase_integral(-gr.beta, -1);
    QuadratureReport r2 = improper_power_phase_integral(gr.beta, 1);
    const Complex j1 = std::polar(1.0, gr.psi_z + gr.beta * log_alpha) * r1.value;
    const Complex j2 = std::polar(1.0, -gr.psi_z - gr.beta * log_alpha) * r2.value;
    const double amp_scale = v.g / v.omega;
    return amp_scale * amp_scale * std::norm(j1 - j2);
}

}  // namespace accelrad::oracle
