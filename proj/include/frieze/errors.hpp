#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frieze {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed user input: bad quiver data, out-of-range indices, bad text.
struct InvalidInput : Error {
    using Error::Error;
};

struct ParseError : InvalidInput {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : InvalidInput(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct NotAcyclic : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct InvalidArrow : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct VertexCountTooLarge : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct PointNotOnVariety : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// Evaluation hit a zero denominator (or a zero base under a negative power).
struct PoleAtPoint : Error {
    using Error::Error;
};

struct ZeroStartCoordinate : Error {
    using Error::Error;
};

// A coordinate of the orbit became zero: the start point is not a generic
// specialization.  `step` is the first bad step, `vertex` the 1-based vertex.
struct NonGenericSpecialization : Error {
    long step;
    int vertex;
    NonGenericSpecialization(const std::string& what, long step_, int vertex_)
        : Error(what), step(step_), vertex(vertex_) {}
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct TermBudgetExceeded : BudgetExceeded {
    using BudgetExceeded::BudgetExceeded;
};

// Exact division failed while mutating a cluster.  The Laurent phenomenon
// guarantees this cannot happen for valid inputs, so it flags a bug.
struct LaurentCertificationFailed : Error {
    using Error::Error;
};

struct NotInvariant : Error {
    using Error::Error;
};

struct DegenerateInvariant : Error {
    using Error::Error;
};

struct NoSymmetryPair : Error {
    using Error::Error;
};

struct IdentityAutomorphism : InvalidInput {
    using InvalidInput::InvalidInput;
};

// Library-wide resource limits, overridable per call and from the CLI.
inline constexpr std::size_t kDefaultTermBudget = 1'000'000;
inline constexpr std::size_t kDefaultBitBudget = 100'000;
inline constexpr int kDefaultDegreeCap = 3;

}  // namespace frieze
