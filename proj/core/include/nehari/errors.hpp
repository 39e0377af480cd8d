#pragma once

#include <stdexcept>
#include <string>

namespace nehari {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidGridError : Error {
  using Error::Error;
};

struct InvalidExponentError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

// plaplace_inverse only accepts right-hand sides symmetric about 1/2.
struct AsymmetricInputError : Error {
  using Error::Error;
};

struct ZeroDirectionError : Error {
  using Error::Error;
};

// The radial energy attains its extremum at a bracket endpoint.
struct BoundaryMaximumError : Error {
  using Error::Error;
};

// Two coarse extrema of equal energy within tolerance.
struct AmbiguousMaximumError : Error {
  using Error::Error;
};

// A generated cone sample failed its own membership check (bug trap).
struct SamplerError : Error {
  using Error::Error;
};

struct EstimationError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace nehari
