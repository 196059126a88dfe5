#pragma once

#include <stdexcept>
#include <string>

namespace goldfish {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Node configuration too close to coincident positions.
class DegenerateConfiguration : public Error {
 public:
  using Error::Error;
};

class ZeroLeadingCoefficient : public Error {
 public:
  using Error::Error;
};

class UnknownFamily : public Error {
 public:
  using Error::Error;
};

/// Operation asked of a family that does not support it (e.g. deformations
/// outside the goldfish family).
class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

/// Custom family whose (eta, eta', phi) triple fails the registration checks.
class InconsistentFamily : public Error {
 public:
  using Error::Error;
};

class UnknownObservable : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Node separation fell below tolerance mid-integration.
class TrajectoryCollision : public Error {
 public:
  TrajectoryCollision(const std::string& msg, double t) : Error(msg), time(t) {}
  double time;
};

class StepSizeUnderflow : public Error {
 public:
  using Error::Error;
};

class BranchAmbiguity : public Error {
 public:
  using Error::Error;
};

/// Contour integral would pass through a singularity of the integrand.
class ContourSingularity : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

class ZeroDeformation : public Error {
 public:
  using Error::Error;
};

class ZeroH1 : public Error {
 public:
  using Error::Error;
};

class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

}  // namespace goldfish
