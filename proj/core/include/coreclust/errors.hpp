#pragma once

#include <stdexcept>
#include <string>

namespace coreclust {

/// Malformed or out-of-contract input (bad file, dimension mismatch,
/// parameter out of range). CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration exceeded its configured budget. CLI maps this to exit code 3.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace coreclust
