#pragma once

#include <stdexcept>
#include <string>

namespace djcm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidConfig : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Norm drift of the numeric propagator exceeded the failure threshold.
class IntegrationFailure : public Error {
public:
    using Error::Error;
};

/// A kept cavity has population above Fock level 1, so it is not a qubit.
class CavitySupportError : public Error {
public:
    using Error::Error;
};

/// Density matrix fails Hermiticity, trace or positivity checks beyond tolerance.
class InvalidDensityMatrix : public Error {
public:
    using Error::Error;
};

}  // namespace djcm
