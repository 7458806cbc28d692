#pragma once

#include <stdexcept>
#include <string>

namespace knotrep {

struct ZeroParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroDeterminant : std::domain_error {
    using std::domain_error::domain_error;
};

struct OutOfRange : std::domain_error {
    using std::domain_error::domain_error;
};

struct NonUnitAxis : std::domain_error {
    using std::domain_error::domain_error;
};

struct NonUnitQuaternion : std::domain_error {
    using std::domain_error::domain_error;
};

struct NonUnitInput : std::domain_error {
    using std::domain_error::domain_error;
};

struct InfeasibleTriangle : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotAKnot : std::domain_error {
    using std::domain_error::domain_error;
};

struct UnsupportedShape : std::domain_error {
    using std::domain_error::domain_error;
};

struct UnsupportedStrandCount : std::domain_error {
    using std::domain_error::domain_error;
};

struct UnknownGenerator : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateConfiguration : std::domain_error {
    using std::domain_error::domain_error;
};

// Numeric rank decision too close to call; forces exact review instead of
// silently misranking.
struct RankAmbiguous : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A floating-point result landed where the exact pre-tests say it cannot be.
struct NumericalInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace knotrep
