#pragma once

#include <stdexcept>
#include <string>

namespace graphschro {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonSquareError : Error {
    using Error::Error;
};
struct NonSymmetricError : Error {
    using Error::Error;
};
struct TruncationTooShortError : Error {
    using Error::Error;
};
struct NotMaximalError : Error {
    using Error::Error;
};
struct AtPoleError : Error {
    using Error::Error;
};
struct EmptyClusterError : Error {
    using Error::Error;
};
struct ZeroThetaError : Error {
    using Error::Error;
};
struct ZeroCoefficientError : Error {
    using Error::Error;
};
struct OnSingularSetError : Error {
    using Error::Error;
};
struct TNotInvertibleError : Error {
    using Error::Error;
};
struct DimensionMismatchError : Error {
    using Error::Error;
};
struct SupportTooDeepError : Error {
    using Error::Error;
};
struct InvalidSeedError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct ToleranceOutOfRangeError : Error {
    using Error::Error;
};

}  // namespace graphschro
