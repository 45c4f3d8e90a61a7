#pragma once

#include <stdexcept>
#include <string>

namespace qg {

// Input text could not be tokenized or parsed. Carries 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Structurally invalid object (bad rotation, asymmetric adjacency, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A derivation's structural preconditions do not hold.
class DerivationError : public std::runtime_error {
public:
    explicit DerivationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A surgery step is illegal on the current embedding.
class SurgeryError : public std::runtime_error {
public:
    explicit SurgeryError(const std::string& msg) : std::runtime_error(msg) {}
};

// A completion/search ran to the end of its space without a solution.
class ExhaustionError : public std::runtime_error {
public:
    explicit ExhaustionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal invariant broken; indicates corrupted state, not user error.
class CorruptionError : public std::logic_error {
public:
    explicit CorruptionError(const std::string& msg) : std::logic_error(msg) {}
};

// An enumeration was refused because its size exceeds the configured cap.
class CapError : public std::runtime_error {
public:
    CapError(const std::string& msg, unsigned long long count)
        : std::runtime_error(msg), count_(count) {}
    unsigned long long count() const { return count_; }

private:
    unsigned long long count_;
};

} // namespace qg
