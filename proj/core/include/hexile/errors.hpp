#pragma once

#include <stdexcept>
#include <string>

namespace hexile {

/// Argument outside the function's domain (x = 0, a level below a colide's
/// minimum, a class other than 1 or 5 where one is required).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A result would not fit in 64 bits.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// A request exceeds the configured memory budget.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace hexile
