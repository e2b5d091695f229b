#pragma once

#include <stdexcept>
#include <string>

namespace tforge {

// Numeric failures: overflow during a recursion, singular centers,
// near-singular leading coefficients. CLI maps these to exit code 3.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid problem descriptors (bad JSON, missing fields, wrong enum
// values). CLI maps these to exit code 2.
class DescriptorError : public std::runtime_error {
public:
    explicit DescriptorError(const std::string& what) : std::runtime_error(what) {}
};

// File I/O failures. CLI maps these to exit code 4.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tforge
