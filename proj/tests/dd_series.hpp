/*
 * accelrad - excitation probabilities of an atom-mirror system
 * with two scalar photons and a relative acceleration.
 *
 * Apache License 2.0
 */
// Test-only double-double (~32 significant digits) partial-sum oracle for the
// hypergeometric series. Independent of the shipped implementation: plain
// term-by-term summation in extended precision, no shared code path.
#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>

namespace ddtest {

struct dd {
    double hi = 0.0;
    double lo = 0.0;
};

inline dd two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline dd quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd renorm(double hi, double lo) { return quick_two_sum(hi, lo); }

inline dd dd_from(double x) { return {x, 0.0}; }

inline dd add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return renorm(s.hi, s.lo);
}

inline dd sub(dd a, dd b) { return add(a, {-b.hi, -b.lo}); }

inline dd mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return renorm(p.hi, p.lo);
}

inline dd div(dd a, dd b) {
    const double q1 = a.hi / b.hi;
    dd r = sub(a, mul(b, dd_from(q1)));
    const double q2 = r.hi / b.hi;
    r = sub(r, mul(b, dd_from(q2)));
    const double q3 = r.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    q.lo += q3;
    return renorm(q.hi, q.lo);
}

inline double to_double(dd a) { return a.hi + a.lo; }

struct cdd {
    dd re, im;
};

inline cdd cdd_from(std::complex<double> z) { return {dd_from(z.real()), dd_from(z.imag())}; }

inline cdd add(cdd a, cdd b) { return {add(a.re, b.re), add(a.im, b.im)}; }

inline cdd mul(cdd a, cdd b) {
    return {sub(mul(a.re, b.re), mul(a.im, b.im)),
            add(mul(a.re, b.im), mul(a.im, b.re))};
}

inline cdd mul(cdd a, dd s) { return {mul(a.re, s), mul(a.im, s)}; }

inline cdd div(cdd a, dd s) { return {div(a.re, s), div(a.im, s)}; }

inline std::complex<double> to_complex(cdd a) {
    return {to_double(a.re), to_double(a.im)};
}

inline double abs2(cdd a) {
    return to_double(add(mul(a.re, a.re), mul(a.im, a.im)));
}

// 2F3 partial-sum oracle: same series definition, summed in double-double
// with no multiplicative shortcuts shared with the implementation.
inline cdd hyp2f3_dd(std::complex<double> a1, std::complex<double> a2, double b1,
                     double b2, double b3, double z, int max_terms = 4000) {
    cdd sum = cdd_from({1.0, 0.0});
    cdd term = cdd_from({1.0, 0.0});
    for (int n = 0; n < max_terms; ++n) {
        const double dn = double(n);
        term = mul(term, cdd_from(a1 + dn));
        term = mul(term, cdd_from(a2 + dn));
        term = mul(term, dd_from(z));
        term = div(term, dd_from(b1 + dn));
        term = div(term, dd_from(b2 + dn));
        term = div(term, dd_from(b3 + dn));
        term = div(term, dd_from(dn + 1.0));
        sum = add(sum, term);
        if (std::sqrt(abs2(term)) < 1e-40 * std::sqrt(abs2(sum))) break;
    }
    return sum;
}

// B_f combination in double-double, mirroring the closed-form definition.
inline cdd b_f_dd(double beta, double psi) {
    const std::complex<double> half_ib(0.0, 0.5 * beta);
    const std::complex<double> a1 = 0.5 + half_ib;
    const std::complex<double> a2 = 1.0 + half_ib;
    const std::complex<double> a3 = 1.5 + half_ib;
    const double z = -psi * psi;
    const cdd f1 = hyp2f3_dd(a1, a2, 0.5, 1.0, 1.5, z);
    const cdd f2 = hyp2f3_dd(a2, a3, 1.5, 1.5, 2.0, z);
    // i*psi*(1 + i*beta) * f2
    const cdd factor = cdd_from(std::complex<double>(0.0, psi) *
                                std::complex<double>(1.0, beta));
    return add(f1, mul(f2, factor));
}

}  // namespace ddtest
