#pragma once

#include <stdexcept>
#include <string>

namespace reebcalc {

// Base for all domain errors; `code()` is the stable machine-readable name
// that the CLI and the python module surface next to the message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Malformed input document or rational literal; message is field-addressed.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message) : Error("parse_error", message) {}
};

// A constructor precondition was violated (odd shift, integer theta, ...).
class InvariantError : public Error {
public:
    explicit InvariantError(const std::string& message)
        : Error("invariant_violation", message) {}
};

// Iterate k of an orbit has an eigenvalue 1: some elliptic block's k*theta
// is an integer. Carries the offending block and the orbit's horizon (the
// minimal degenerate iteration order).
class DegenerateIterateError : public Error {
public:
    DegenerateIterateError(std::string orbit, std::size_t block_index,
                           std::string theta, long long k, long long minimal_k)
        : Error("degenerate_iterate",
                "degenerate iterate: orbit '" + orbit + "' block #" +
                    std::to_string(block_index) + " (theta = " + theta +
                    ") degenerates at k = " + std::to_string(k) +
                    "; minimal degenerate k for this orbit is " +
                    std::to_string(minimal_k)),
          orbit_(std::move(orbit)), block_index_(block_index),
          theta_(std::move(theta)), k_(k), minimal_k_(minimal_k) {}

    const std::string& orbit() const noexcept { return orbit_; }
    std::size_t block_index() const noexcept { return block_index_; }
    const std::string& theta() const noexcept { return theta_; }
    long long k() const noexcept { return k_; }
    long long minimal_k() const noexcept { return minimal_k_; }

private:
    std::string orbit_;
    std::size_t block_index_;
    std::string theta_;
    long long k_;
    long long minimal_k_;
};

class NonPositiveMeanIndexError : public Error {
public:
    explicit NonPositiveMeanIndexError(const std::string& message)
        : Error("non_positive_mean_index", message) {}
};

class WrongDimensionError : public Error {
public:
    explicit WrongDimensionError(const std::string& message)
        : Error("wrong_dimension", message) {}
};

class RepeatedSemiaxisError : public Error {
public:
    explicit RepeatedSemiaxisError(const std::string& message)
        : Error("repeated_semiaxis", message) {}
};

class NonPositiveDeltaError : public Error {
public:
    explicit NonPositiveDeltaError(const std::string& message)
        : Error("non_positive_delta", message) {}
};

class DeltaTooSmallError : public Error {
public:
    explicit DeltaTooSmallError(const std::string& message)
        : Error("delta_too_small", message) {}
};

class BadIterateError : public Error {
public:
    explicit BadIterateError(const std::string& message)
        : Error("bad_iterate", message) {}
};

// No clustering solution within the search horizon. `provable` distinguishes
// a parity obstruction (no solution exists at any bound) from plain
// exhaustion of the horizon.
class InfeasibleWithinBoundError : public Error {
public:
    InfeasibleWithinBoundError(const std::string& message, bool provable,
                               std::string lower_bound = "")
        : Error("infeasible_within_bound", message), provable_(provable),
          lower_bound_(std::move(lower_bound)) {}

    bool provable() const noexcept { return provable_; }
    // Exact lower bound on the achievable spread, "p/q"; empty unless provable.
    const std::string& lower_bound() const noexcept { return lower_bound_; }

private:
    bool provable_;
    std::string lower_bound_;
};

class GuardExceededError : public Error {
public:
    explicit GuardExceededError(const std::string& message)
        : Error("guard_exceeded", message) {}
};

}  // namespace reebcalc
