#pragma once

#include <stdexcept>
#include <string>

namespace qlps {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value violates a type invariant (bad grid, bad mass, index out of range).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The explicit step produced a non-finite or zero-norm state.
class UnstableStep : public Error {
public:
    explicit UnstableStep(double pre_norm)
        : Error("unstable step (pre_norm=" + std::to_string(pre_norm) + ")"),
          pre_norm_(pre_norm) {}

    double pre_norm() const noexcept { return pre_norm_; }

private:
    double pre_norm_;
};

} // namespace qlps
