#pragma once

#include <stdexcept>
#include <string>

namespace burniat {

// Two classes refer to lattices with a different number of blown-up points.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed caller input: out-of-range r, duplicate points, bad class spec.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of the operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A line configuration that is not reduced or violates a build precondition.
struct DegenerateConfig : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A 9-line arrangement that cannot be the branch locus of any Burniat surface.
struct InvalidBurniat : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter point on a rejected locus; callers redraw.
struct DegeneratePoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A semi-decision returned "undecided" where a definite answer was required.
struct Inconclusive : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace burniat
