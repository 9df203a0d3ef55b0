#pragma once

#include <stdexcept>
#include <string>

namespace curvex {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad edge lists, unknown generator names, invalid JSON,
/// out-of-range parameters.
class InputError : public Error {
public:
    using Error::Error;
};

/// Raised by expectation and moment operations when the requested color
/// count admits no proper coloring at all.
class EmptySpaceError : public Error {
public:
    using Error::Error;
};

/// Raised when an index is requested at a vertex where the function ties
/// with a neighbor. Carries the offending vertex.
class LocalInjectivityError : public Error {
public:
    explicit LocalInjectivityError(int vertex)
        : Error("function is not locally injective at vertex " + std::to_string(vertex)),
          vertex_(vertex) {}

    int vertex() const noexcept { return vertex_; }

private:
    int vertex_;
};

}  // namespace curvex
