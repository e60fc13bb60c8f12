/*
 * accelrad - excitation probabilities of an atom-mirror system
 * with two scalar photons and a relative acceleration.
 *
 * Apache License 2.0
 */
#pragma once

#include <complex>

#include "accelrad/errors.hpp"

namespace accelrad::special {

using Complex = std::complex<double>;

// log Gamma on the conventional branch (real on the positive real axis,
// continuous off the negative real cut). Lanczos g=607/128 with the 15-term
// coefficient set in the right half-plane, branch-stable reflection on the
// left. Throws PoleError at non-positive integers.
Complex ln_gamma(Complex z);

// exp(ln_gamma(z)).
Complex gamma(Complex z);

// Gamma on the imaginary axis:
//   |Gamma(i*y)|   = sqrt(pi / (y*sinh(pi*y)))      (y > 0)
//   arg Gamma(i*y) = Im ln_gamma(1 + i*y) - pi/2    (y > 0, odd in y)
// log_modulus stays finite long after modulus has underflowed.
struct ImagAxisGamma {
    double modulus;
    double log_modulus;  // natural log
    double argument;
};
ImagAxisGamma gamma_imag_axis(double y);

// log(sinh(x)) for x > 0 without overflow.
double log_sinh(double x);

// Modified Bessel function of imaginary order,
//   K_{i*mu}(x) = int_0^inf exp(-x*cosh t) * cos(mu*t) dt,  x > 0, real result.
// Primary evaluation: tanh-sinh quadrature on [0, t_max] with
// t_max = arcosh(-ln(1e-18)/x + 1). For mu > 20 the range is split into
// panels no wider than pi/(4*mu) so every oscillation of cos(mu*t) stays
// resolved; accuracy degrades gracefully there and callers flag it.
double bessel_k_imag_order(double mu, double x);

// Secondary evaluation of the same integrand by composite Gauss-Legendre
// panels (independent discretization family, doubled panel density).
double bessel_k_imag_order_gauss(double mu, double x);

// Log-magnitude envelope of K_{i*mu}(x) in the small-argument regime,
// ln[ sqrt(pi/(mu*sinh(pi*mu))) ]; the oscillatory |sin| factor is dropped.
// Used only for log-space estimates once the direct value underflows.
double bessel_k_imag_order_log_envelope(double mu, double x);

// Generalized hypergeometric 2F3 with complex upper and real lower
// parameters, real argument:
//   sum_n (a1)_n (a2)_n / ((b1)_n (b2)_n (b3)_n) * z^n / n!
// Terms are built by the multiplicative recursion
//   term_{n+1} = term_n * (a1+n)(a2+n) z / ((b1+n)(b2+n)(b3+n)(n+1)),
// truncated when |term| < 1e-16*|sum| for 3 consecutive terms.
// Throws ParameterPole if any b is a non-positive integer and NoConvergence
// after 10000 terms.
Complex hyp2f3(Complex a1, Complex a2, double b1, double b2, double b3, double z);

}  // namespace accelrad::special
