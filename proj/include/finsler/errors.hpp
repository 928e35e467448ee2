#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace finsler {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// y = 0 passed where a nonzero direction is required.
struct ZeroDirection : Error {
    ZeroDirection() : Error("zero direction vector") {}
};

// Point left the positive-orientation cone x1*y2 - x2*y1 > 0.
struct OrientationViolation : Error {
    explicit OrientationViolation(double cross)
        : Error("cross product " + std::to_string(cross) + " is not positive") {}
};

// A derivative beyond the jet's truncation order was requested.
struct CapTooSmall : Error {
    using Error::Error;
};

// Evaluation outside the domain: division by zero, sqrt of a nonpositive
// value, |s| >= r, and similar.
struct DomainError : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    SyntaxError(std::string what, std::size_t offset)
        : Error(std::move(what) + " at offset " + std::to_string(offset)), offset(offset) {}
    std::size_t offset;
};

struct UnknownIdentifier : Error {
    UnknownIdentifier(std::string name, std::size_t offset)
        : Error("unknown identifier '" + name + "' at offset " + std::to_string(offset)),
          name(std::move(name)),
          offset(offset) {}
    std::string name;
    std::size_t offset;
};

// The integrand has a pole or a vanishing denominator on the integration path.
struct SingularIntegrand : Error {
    using Error::Error;
};

// Adaptive quadrature could not reach the requested tolerance.
struct QuadratureFailure : Error {
    using Error::Error;
};

// det g fell below the degeneracy threshold.
struct DegenerateMetric : Error {
    using Error::Error;
};

// x and y are (numerically) linearly dependent.
struct CollinearInputs : Error {
    CollinearInputs() : Error("x and y are collinear") {}
};

// The H-form of E divides by s; |s| is too small to evaluate it.
struct SAxisSingular : Error {
    explicit SAxisSingular(double s)
        : Error("|s| = " + std::to_string(s) + " too close to the s = 0 axis") {}
};

// Bad CLI flags, malformed parameter files, invalid regions.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace finsler
