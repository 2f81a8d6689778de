#pragma once

#include <stdexcept>
#include <string>

namespace twc {

// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration (bad flag combinations, out-of-range parameters).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// Malformed input data; carries the offending line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::uint64_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    explicit ParseError(const std::string& what) : Error(what), line_(0) {}
    std::uint64_t line() const { return line_; }

private:
    std::uint64_t line_;
};

// Input that parses but cannot be used (missing file, mismatched universes).
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

// A series or iteration that does not converge (spectral radius >= 1).
class DivergenceError : public Error {
public:
    explicit DivergenceError(const std::string& what) : Error(what) {}
};

// Problem size exceeds a configured resource cap.
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& what) : Error(what) {}
};

// Caller violated a documented precondition.
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace twc
