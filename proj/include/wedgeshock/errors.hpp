#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wedgeshock {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thermodynamic input outside the admissible range (above vacuum, gamma <= 1, ...).
struct DomainError : Error {
  using Error::Error;
};

/// No attached plane shock exists for the requested wedge angle.
struct DetachedError : Error {
  using Error::Error;
};

/// Wedge angle outside the transonic window of the weak branch.
struct NotTransonicError : Error {
  using Error::Error;
};

/// Downstream state not strictly subsonic where subsonicity is required.
struct NotSubsonicError : Error {
  using Error::Error;
};

/// A sign condition of the weak-shock stability certificate failed.
struct NotWeakTransonicError : Error {
  using Error::Error;
};

/// Coordinate transform left its invertibility regime (perturbation too large).
struct TransformSingularError : Error {
  using Error::Error;
};

struct SolverFailedError : Error {
  SolverFailedError(const std::string& msg, std::vector<double> history)
      : Error(msg), residual_history(std::move(history)) {}
  std::vector<double> residual_history;
};

struct ShockUpdateFailedError : Error {
  using Error::Error;
};

struct NotContractingError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace wedgeshock
