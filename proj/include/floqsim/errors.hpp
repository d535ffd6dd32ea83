#pragma once

#include <stdexcept>
#include <string>

namespace floqsim {

/// Base class for all floqsim errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonHermitianInput : Error { using Error::Error; };
struct NonUnitaryInput : Error { using Error::Error; };
struct IndefiniteInput : Error { using Error::Error; };
struct DegenerateSpectrum : Error { using Error::Error; };
struct ResonantDenominator : Error { using Error::Error; };
struct StepSizeUnderflow : Error { using Error::Error; };
struct QuasienergyDegeneracy : Error { using Error::Error; };
struct AmbiguousTracking : Error { using Error::Error; };
struct TraceLeak : Error { using Error::Error; };
struct NonphysicalState : Error { using Error::Error; };
struct NonPhysicalInput : Error { using Error::Error; };
struct UnknownBasis : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

struct DegenerateSteadyState : Error {
  DegenerateSteadyState(const std::string& msg, int dim)
      : Error(msg), kernel_dim(dim) {}
  int kernel_dim;
};

}  // namespace floqsim
