#pragma once

#include <stdexcept>
#include <string>

namespace strongedge {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: self-loops, unknown kinds, infeasible sizes, parse failures.
class InputError : public Error {
public:
    using Error::Error;
};

/// API misuse: partial coloring where a total one is required, coloring an
/// already-colored edge, querying a missing edge.
class UsageError : public Error {
public:
    using Error::Error;
};

/// A documented operation precondition does not hold (e.g. class_check gate).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A resource limit was exceeded; carries the best bounds found so far.
class ResourceError : public Error {
public:
    ResourceError(const std::string& msg, int lower, int upper)
        : Error(msg), lower_bound(lower), upper_bound(upper) {}
    int lower_bound;
    int upper_bound;
};

} // namespace strongedge
