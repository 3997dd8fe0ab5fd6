#pragma once

#include <stdexcept>
#include <string>

namespace neg4lat {

/// Base class for every error raised by the library. The CLI maps these to
/// exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two classes live over different numbers of blow-ups.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A precondition on the mathematical input does not hold (wrong square,
/// non-normal form, foreign sign assignment, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Reflection or basis index out of range / not distinct.
class IndexError : public Error {
public:
    using Error::Error;
};

/// Malformed literal, pipeline, or table file.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A surgery scenario that the classification rules exclude.
class InfeasibleScenario : public Error {
public:
    using Error::Error;
};

/// Non-positive symplectic area.
class AreaError : public Error {
public:
    using Error::Error;
};

/// Fiber sum sides with mismatched areas of the gluing surface.
class GluingError : public Error {
public:
    using Error::Error;
};

} // namespace neg4lat
