/*
 * accelrad - excitation probabilities of an atom-mirror system
 * with two scalar photons and a relative acceleration.
 *
 * Apache License 2.0
 */
#pragma once

#include <stdexcept>
#include <string>

namespace accelrad {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input validation.
class NonPositiveInput : public Error {
public:
    using Error::Error;
};

// Mirror/atom would sit outside the Rindler wedge (z0 >= c^2/a).
class WedgeViolation : public Error {
public:
    using Error::Error;
};

// Argument outside a function's domain (x <= 0, y == 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Gamma function evaluated at a non-positive integer.
class PoleError : public Error {
public:
    using Error::Error;
};

// Hypergeometric lower parameter at a non-positive integer.
class ParameterPole : public Error {
public:
    using Error::Error;
};

// A quadrature or extrapolation failed to meet its residual target.
class NoConvergence : public Error {
public:
    using Error::Error;
};

}  // namespace accelrad
