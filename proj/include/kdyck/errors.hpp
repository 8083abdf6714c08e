#pragma once

#include <stdexcept>
#include <string>

namespace kdyck {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Parameter combinations outside the defined domain (k < 1, t >= k, ...).
struct BadParameters : Error {
    explicit BadParameters(const std::string& what) : Error(what) {}
};

// A path dips below its allowed floor.
struct BoundaryViolation : Error {
    explicit BoundaryViolation(const std::string& what) : Error(what) {}
};

// A path fails to return to level zero.
struct EndpointViolation : Error {
    explicit EndpointViolation(const std::string& what) : Error(what) {}
};

// An exact division had a nonzero remainder.
struct NonDivisible : Error {
    explicit NonDivisible(const std::string& what) : Error(what) {}
};

// Unparseable or structurally invalid path input.
struct MalformedPath : Error {
    explicit MalformedPath(const std::string& what) : Error(what) {}
};

// Unparseable or structurally invalid tree input.
struct MalformedTree : Error {
    explicit MalformedTree(const std::string& what) : Error(what) {}
};

// A component list that cannot be recombined into a bounded path.
struct MalformedDecomposition : Error {
    explicit MalformedDecomposition(const std::string& what) : Error(what) {}
};

// Series operands with incompatible truncation orders or variable counts.
struct OrderMismatch : Error {
    explicit OrderMismatch(const std::string& what) : Error(what) {}
};

// Reciprocal of a series whose constant term is not 1.
struct NonUnitConstantTerm : Error {
    explicit NonUnitConstantTerm(const std::string& what) : Error(what) {}
};

// Index or coefficient request beyond the truncation order.
struct OutOfRange : Error {
    explicit OutOfRange(const std::string& what) : Error(what) {}
};

// Bad JSON / CSV / CLI input discovered at the I/O surface.
struct MalformedInput : Error {
    explicit MalformedInput(const std::string& what) : Error(what) {}
};

// A computed drawing layout violates its own no-overlap guarantees.
struct LayoutError : Error {
    explicit LayoutError(const std::string& what) : Error(what) {}
};

} // namespace kdyck
