#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace diffchar {

// Base of every failure that is a property of the mathematical input
// (as opposed to a malformed problem file).
class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotADivisor : public MathError {
public:
    using MathError::MathError;
};

class NoLeader : public MathError {
public:
    NoLeader() : MathError("no leader: polynomial is constant") {}
};

// 1 belongs to the ideal under consideration.
class TrivialIdeal : public MathError {
public:
    using MathError::MathError;
};

// The input set does not characterize the ideal it is claimed to
// (non-invertible initial or separant, incoherent set, ...).
class NotCharacterizing : public MathError {
public:
    using MathError::MathError;
};

class StepLimitExceeded : public MathError {
public:
    using MathError::MathError;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Safety valve shared by the Buchberger loop and the Rosenfeld-Groebner
// tree. Read from DIFFCHAR_MAX_STEPS; unset or unparsable means unlimited.
std::optional<std::size_t> max_steps_from_env();

} // namespace diffchar
