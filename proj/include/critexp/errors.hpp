#pragma once

#include <stdexcept>
#include <string>

namespace critexp {

/// Raised when a caller violates a documented precondition (e.g. alpha <= 2).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a length would overflow its representation or exceed a budget.
class size_error : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Raised by the word readers on malformed input.
class format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace critexp
