#ifndef POLYPER_ERRORS_HPP
#define POLYPER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyper {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Integrator hit the step budget before reaching the end of the interval or
// an escape; signals a stiff/degenerate instance, not a blow-up.
struct StepLimitExceeded : Error {
    using Error::Error;
};

// The requested initial value does not complete on the integration interval.
struct EscapedDomain : Error {
    using Error::Error;
};

// Escape-arm classification queried inside the disk |z| <= rho.
struct InsideDisk : Error {
    using Error::Error;
};

// A contour sample left the completion domain.
struct EscapeOnContour : Error {
    using Error::Error;
};

// |q| fell below the resolvable threshold at a contour sample.
struct ZeroOnContour : Error {
    using Error::Error;
};

// Newton refinement left its search region or stopped making progress.
struct Diverged : Error {
    using Error::Error;
};

// |q'| is numerically zero; likely a multiple zero.
struct SingularDerivative : Error {
    using Error::Error;
};

struct NonpositiveK : Error {
    using Error::Error;
};

// K does not dominate max|P0|.
struct BadK : Error {
    using Error::Error;
};

struct BadC : Error {
    using Error::Error;
};

struct UnsupportedDegree : Error {
    using Error::Error;
};

// Leading coefficient vanishes (or cannot be certified sign-definite).
struct VanishingLeading : Error {
    using Error::Error;
};

// R_{n-1} changes sign on the unit circle.
struct IndefiniteLeading : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace polyper

#endif
