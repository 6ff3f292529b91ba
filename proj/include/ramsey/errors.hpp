#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramsey {

// An instance needs more qubits (or search bits) than the configured
// limit allows. Carries the offending size so callers can report it.
class InstanceTooLargeError : public std::runtime_error {
public:
    InstanceTooLargeError(std::uint64_t qubits, std::uint64_t limit, const std::string& what)
        : std::runtime_error(what), qubits_(qubits), limit_(limit) {}

    std::uint64_t qubits() const { return qubits_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t qubits_;
    std::uint64_t limit_;
};

// Raised by the Pauli compiler when the pre-merge expansion would
// exceed the configured term budget.
class TooManyTermsError : public std::runtime_error {
public:
    TooManyTermsError(std::uint64_t projected, std::uint64_t limit, const std::string& what)
        : std::runtime_error(what), projected_(projected), limit_(limit) {}

    std::uint64_t projected_terms() const { return projected_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t projected_;
    std::uint64_t limit_;
};

// Malformed text input; line numbers are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace ramsey
