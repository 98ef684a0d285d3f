#pragma once

#include <stdexcept>
#include <string>

namespace usc {

/// Rejected input: parameter outside its domain, malformed configuration.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested problem size exceeds a documented ceiling.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A dense eigensolve failed; carries the dimension and iteration budget.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, int dimension, int iterations)
      : std::runtime_error(what), dimension(dimension), iterations(iterations) {}

  int dimension;
  int iterations;
};

/// Harmonic form requested on the unstable side of the stability boundary.
class InstabilityError : public std::domain_error {
 public:
  InstabilityError(const std::string& what, double ratio)
      : std::domain_error(what), ratio(ratio) {}

  double ratio;  // m*omega0^2*E_q / (4 g^2) at the offending parameters
};

/// Output file or directory could not be created or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace usc
