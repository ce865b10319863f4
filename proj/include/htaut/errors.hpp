#pragma once

#include <stdexcept>
#include <string>

namespace htaut {

// Caller supplied data that violates a documented precondition.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Well-formed request outside the implemented range (e.g. genus >= 2 vertex integrals).
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency check failed; indicates a bug rather than bad input.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace htaut
