#pragma once

#include <stdexcept>
#include <string>

namespace strandsim {

/// Base class for all strandsim errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A size or resource cap was exceeded (qubit count, control count, ...).
class CapacityError : public Error {
public:
    using Error::Error;
};

/// An API contract was violated (bad index, wrong gate kind, ...).
class UsageError : public Error {
public:
    using Error::Error;
};

/// Input data failed validation (bad sequence characters, bad lengths, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Structurally malformed input (e.g. FASTA text without a header).
class FormatError : public Error {
public:
    using Error::Error;
};

/// The request is well-formed but outside the supported feature set.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

} // namespace strandsim
