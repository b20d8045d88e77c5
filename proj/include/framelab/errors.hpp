#pragma once

#include <stdexcept>
#include <string>

namespace framelab {

/// Base of every error raised by the library. The CLI maps all of these to
/// exit status 2 (input error).
class Error : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

#define FRAMELAB_ERROR(Name)                       \
    class Name : public Error {                    \
     public:                                       \
        using Error::Error;                        \
    }

FRAMELAB_ERROR(DimensionError);      // shape or length mismatch
FRAMELAB_ERROR(DomainError);         // argument outside the operation's domain
FRAMELAB_ERROR(SingularFrameError);  // lower bound below tolerance
FRAMELAB_ERROR(PreconditionError);   // a stated precondition does not hold
FRAMELAB_ERROR(ModelError);          // request not representable in the finite model
FRAMELAB_ERROR(GridError);           // incommensurate sampling grids
FRAMELAB_ERROR(TruncationError);     // an infinite sum cannot be truncated soundly
FRAMELAB_ERROR(UnsupportedError);    // input class not admitted (e.g. no compact support)
FRAMELAB_ERROR(InfeasibleError);     // no solution exists for the requested parameters

#undef FRAMELAB_ERROR

}  // namespace framelab
