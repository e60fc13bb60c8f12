/*
 * accelrad - excitation probabilities of an atom-mirror system
 * with two scalar photons and a relative acceleration.
 *
 * Apache License 2.0
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <queue>
#include <vector>

namespace accelrad::quad {

using Complex = std::complex<double>;

struct Result {
    Complex value{0.0, 0.0};
    double abs_error = 0.0;
    long evaluations = 0;
};

namespace detail {

// 15-point Kronrod / 7-point Gauss pair (QUADPACK dqk15 constants,
// evaluated with 80 decimal digit arithmetic by L. W. Fullerton, Bell Labs).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

}  // namespace detail

// Single G7/K15 panel. Returns the K15 estimate; abs_error is the usual
// QUADPACK-style (200*|K15-G7|)^1.5-free plain |K15-G7| bound, which is
// conservative enough for the error-driven splitting used here.
template <class F>
Result gk15_panel(F&& f, double a, double b) {
    using detail::kWg;
    using detail::kWgk;
    using detail::kXgk;
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const Complex fc = f(c);
    Complex resg = kWg[3] * fc;
    Complex resk = kWgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const Complex f1 = f(c - dx);
        const Complex f2 = f(c + dx);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    Result r;
    r.value = resk * h;
    r.abs_error = std::abs((resk - resg) * h);
    r.evaluations = 15;
    return r;
}

// Error-driven adaptive subdivision over a pre-split set of panel boundaries.
// Splits the worst panel until the summed error estimate meets
// max(abs_tol, rel_tol*|value|) or the evaluation budget runs out.
template <class F>
Result gk_adaptive(F&& f, const std::vector<double>& breakpoints, double abs_tol,
                   double rel_tol, long max_evals) {
    struct Seg {
        double a, b;
        Complex value;
        double err;
        bool operator<(const Seg& o) const {
            if (err != o.err) return err < o.err;
            return a > o.a;  // deterministic tie-break
        }
    };
    std::priority_queue<Seg> heap;
    Result total;
    Complex sum{0.0, 0.0};
    double errsum = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        Result r = gk15_panel(f, breakpoints[i], breakpoints[i + 1]);
        total.evaluations += r.evaluations;
        sum += r.value;
        errsum += r.abs_error;
        heap.push(Seg{breakpoints[i], breakpoints[i + 1], r.value, r.abs_error});
    }
    while (!heap.empty() && total.evaluations + 30 <= max_evals) {
        if (errsum <= std::max(abs_tol, rel_tol * std::abs(sum))) break;
        Seg worst = heap.top();
        if (worst.err <= 1e-300) break;
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Result r1 = gk15_panel(f, worst.a, mid);
        Result r2 = gk15_panel(f, mid, worst.b);
        total.evaluations += 30;
        sum += r1.value + r2.value - worst.value;
        errsum += r1.abs_error + r2.abs_error - worst.err;
        heap.push(Seg{worst.a, mid, r1.value, r1.abs_error});
        heap.push(Seg{mid, worst.b, r2.value, r2.abs_error});
    }
    total.value = sum;
    total.abs_error = errsum;
    return total;
}

// Tanh-sinh (double exponential) quadrature on a finite interval.
// The integrand receives (x, x-a, b-x); the endpoint distances are computed
// without cancellation so integrands with endpoint phase singularities
// (x^{i*mu}, (b-x)^{i*mu}) can be evaluated stably arbitrarily close to the
// endpoints. Levels are doubled until two consecutive refinements agree.
template <class F>
Result tanh_sinh(F&& f, double a, double b, double rel_tol = 1e-13,
                 int max_level = 12) {
    const double c0 = 0.5 * (a + b);
    const double c1 = 0.5 * (b - a);
    const double kPiHalf = 1.5707963267948966;
    const double t_max = 6.5;  // weight ~ exp(-pi/2*e^t) is far below 1e-300 here

    Result out;
    auto node_pair_sum = [&](double t) {
        const double u = kPiHalf * std::sinh(t);
        const double eu = std::exp(-2.0 * u);
        const double denom = 1.0 + eu;
        // 1 -/+ tanh(u) without cancellation
        const double dnear = 2.0 * eu / denom;  // 1 - tanh(u)
        const double dfar = 2.0 / denom;        // 1 + tanh(u)
        const double w = kPiHalf * std::cosh(t) * (4.0 * eu / (denom * denom));
        if (!(w > 1e-320)) return Complex(0.0, 0.0);
        const double d_hi = c1 * dnear;  // distance to b for the +t node
        const double d_lo = c1 * dfar;   // distance to a for the +t node
        out.evaluations += 2;
        return w * (f(b - d_hi, d_lo, d_hi) + f(a + d_hi, d_hi, d_lo));
    };

    // level 0: trapezoid with h = 1 over all integer t
    Complex sum = kPiHalf * f(c0, c1, c1);
    out.evaluations = 1;
    for (long k = 1; double(k) <= t_max; ++k) sum += node_pair_sum(double(k));
    double h = 1.0;
    Complex integral = sum * h * c1;
    int consecutive_ok = 0;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        Complex add{0.0, 0.0};
        for (long k = 1; double(k) * h <= t_max; k += 2) add += node_pair_sum(double(k) * h);
        sum += add;
        const Complex prev = integral;
        integral = sum * h * c1;
        const double diff = std::abs(integral - prev);
        out.abs_error = diff;
        if (level >= 5) {
            if (diff <= rel_tol * std::abs(integral) + 1e-300) {
                if (++consecutive_ok >= 2) break;
            } else {
                consecutive_ok = 0;
            }
        }
    }
    out.value = integral;
    return out;
}

// Convenience adapter for integrands that only need x.
template <class F>
Result tanh_sinh_plain(F&& f, double a, double b, double rel_tol = 1e-13,
                       int max_level = 12) {
    return tanh_sinh([&](double x, double, double) { return f(x); }, a, b,
                     rel_tol, max_level);
}

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
std::vector<std::pair<double, double>> gauss_legendre_nodes(int n);

// Composite fixed-order Gauss-Legendre rule (real integrand).
template <class F>
double gauss_legendre_panels(F&& f, double a, double b, int order, int panels) {
    const auto nodes = gauss_legendre_nodes(order);
    const double w = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * w;
        const double mid = lo + 0.5 * w;
        for (const auto& [x, wt] : nodes) sum += wt * f(mid + 0.5 * w * x);
    }
    return sum * 0.5 * w;
}

}  // namespace accelrad::quad
