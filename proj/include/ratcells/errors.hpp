#pragma once

#include <stdexcept>
#include <string>

namespace ratcells {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Mismatched lattice ranks (vector lengths).
class dimension_error : public error {
public:
    using error::error;
};

/// An operation was called outside its contract (non-simplicial input,
/// non-full-dimensional cone, missing hypothesis, ...).
class precondition_error : public error {
public:
    using error::error;
};

/// Evaluation of a fraction at a point where a denominator character vanishes.
class pole_error : public precondition_error {
public:
    using precondition_error::precondition_error;
};

/// Malformed or invariant-violating user input (JSON, CLI arguments, data files).
class input_error : public error {
public:
    using error::error;
};

/// Input exceeds the desk-scale guards of the enumeration routines.
class size_error : public input_error {
public:
    using input_error::input_error;
};

/// Bug trap: an internal consistency check failed. Never expected on valid runs.
class internal_error : public error {
public:
    using error::error;
};

} // namespace ratcells
