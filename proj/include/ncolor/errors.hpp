#pragma once

#include <stdexcept>
#include <string>

namespace ncolor {

/// Raised when a caller violates an operation's precondition
/// (mismatched truncation orders, a zero argument, an out-of-range parameter).
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an internal invariant fails, e.g. a count that must be
/// divisible by k leaves a remainder. Never expected in correct code.
class invariant_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace ncolor
