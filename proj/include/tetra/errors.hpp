#pragma once

#include <stdexcept>
#include <string>

namespace tetra {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input violates a documented precondition (bad parameter range, non-unitary
// matrix, zero weight vector, ...).
struct ParameterError : Error {
    using Error::Error;
};

// Argument lies outside the domain the operation is defined on.
struct DomainError : Error {
    using Error::Error;
};

// A denominator that should be bounded away from zero is not.
struct SingularityError : Error {
    using Error::Error;
};

// Function values on an integration contour are too close to zero; the
// caller may retry with a perturbed radius.
struct ContourError : Error {
    using Error::Error;
};

// Input is degenerate (identically zero polynomial, all-zero coefficients).
struct DegenerateInputError : Error {
    using Error::Error;
};

// A quantity that is provably nonzero/impossible was observed numerically;
// indicates a bug or an input far outside the certified regime.
struct ContradictionError : Error {
    using Error::Error;
};

// A construction that requires a feasibility condition was invoked on an
// infeasible input.
struct FeasibilityError : Error {
    using Error::Error;
};

// A numerical search failed to produce a certified object.
struct ConstructionError : Error {
    using Error::Error;
};

// A precondition of a cheap routine failed in a way that points at a more
// general (and more expensive) routine.
struct PreconditionError : Error {
    using Error::Error;
};

// Lifting would need more than one factor-and-renormalize step.
struct MultiStepError : Error {
    using Error::Error;
};

}  // namespace tetra
