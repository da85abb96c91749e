#pragma once

#include <stdexcept>
#include <string>

namespace allplaces {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: unparsable rational, non-prime modulus, out-of-range parameter.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class InsufficientPrecision : public Error {
public:
    using Error::Error;
};

class PrimeMismatch : public Error {
public:
    using Error::Error;
};

/// A q = 0 series was asked for a p-adic value outside the classical disc of convergence.
class ClassicalDivergence : public Error {
public:
    using Error::Error;
};

class NonzeroConstantTerm : public Error {
public:
    using Error::Error;
};

class ZeroLinearCoefficient : public Error {
public:
    using Error::Error;
};

class ZeroArgument : public Error {
public:
    using Error::Error;
};

class SupportExceedsBudget : public Error {
public:
    using Error::Error;
};

class DegenerateScaleFactor : public Error {
public:
    using Error::Error;
};

}  // namespace allplaces
