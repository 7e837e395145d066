#pragma once

#include <stdexcept>
#include <string>

namespace regchoice {

/// Malformed or out-of-domain input: bad documents, invalid diagrams,
/// unsupported operation/argument combinations.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vector or matrix sizes that do not agree.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A guaranteed mathematical property failed to hold. For valid inputs this
/// is unreachable; seeing one means a bug in this library.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The matrix is not Z-equivalent to (I | 0 0), so solvability for every
/// right-hand side is not certified.
class NotE00Error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace regchoice
