#pragma once

#include <stdexcept>
#include <string>

namespace problocal {

/// Bad user input: unknown vertex, malformed file, invalid parameters.
/// CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed graph file; carries the offending line number.
class ParseError : public InputError {
public:
    ParseError(const std::string& msg, std::size_t line)
        : InputError("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// An exhaustive oracle refused to run because the instance exceeds its budget.
/// Refusal is a hard error, never a silent approximation.
class BudgetError : public InputError {
public:
    explicit BudgetError(const std::string& msg) : InputError(msg) {}
};

/// A checked invariant or bound failed. CLI maps this to exit code 1.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A node handler fault inside the synchronous-round simulator.
class SimulationError : public std::runtime_error {
public:
    explicit SimulationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A simulated query probed outside the collected ball: the supplied round
/// budget underestimated the probe radius.
class RadiusViolation : public SimulationError {
public:
    explicit RadiusViolation(const std::string& msg) : SimulationError(msg) {}
};

} // namespace problocal
