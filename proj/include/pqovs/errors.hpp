#pragma once

#include <stdexcept>
#include <string>

namespace pqovs {

// Bad caller input: nonpositive radii, tiny grids, unsupported orders.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Numerically meaningful failure of an otherwise well-formed request.
class NumericFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularPlaneError : public NumericFailure {
public:
    using NumericFailure::NumericFailure;
};

class OverflowGuardError : public NumericFailure {
public:
    using NumericFailure::NumericFailure;
};

class TruncationError : public NumericFailure {
public:
    using NumericFailure::NumericFailure;
};

class CoverageError : public NumericFailure {
public:
    using NumericFailure::NumericFailure;
};

class FlatProfileError : public NumericFailure {
public:
    using NumericFailure::NumericFailure;
};

class GridMismatchError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

}  // namespace pqovs
