#pragma once

#include <stdexcept>
#include <string>

namespace derivlab {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid ring specification (non-prime p, reducible modulus, m < 2, ...).
class RingSpecError : public Error {
public:
    using Error::Error;
};

/// Mixed operands from different rings.
class RingMismatchError : public Error {
public:
    using Error::Error;
};

/// Operation requires a finite ring.
class InfiniteRingError : public Error {
public:
    using Error::Error;
};

/// Non-conforming matrix shapes or out-of-range indices.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Exhaustive enumeration would exceed the configured budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace derivlab
