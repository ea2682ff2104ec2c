#pragma once

#include <stdexcept>
#include <string>

namespace hardylab {

// Quadrature grid too coarse for the polynomial it is asked to resolve.
struct AliasingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two containers that must have matching lengths do not.
struct LengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Scalar argument outside its admissible range.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A zeta-node and an eta-node (nearly) coincide on the circle.
struct GridCoincidence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sequence too short for the requested difference order.
struct TooShort : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operand does not fit the operator truncation.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A documented precondition of a theorem check does not hold.
struct PreconditionFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficient domination |g_hat(n)| >= |a_n| fails at some index.
struct DominationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Empirical lower bound exceeded the theorem upper bound; since the
// mathematics guarantees the ordering this signals a quadrature bug.
struct CertificateViolation : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace hardylab
