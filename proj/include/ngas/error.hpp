#pragma once

#include <stdexcept>
#include <string>

namespace ngas {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the inputs was violated (bad spec, unsupported combination, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The inputs were valid but the requested numerical object does not exist or did not converge.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

// The broken-symmetry gap cubic has no real physical root (coupling above the critical value).
class NoPhysicalRoot : public NumericalFailure {
 public:
  NoPhysicalRoot(const std::string& what, double lambda_c)
      : NumericalFailure(what), lambda_c_(lambda_c) {}
  double lambda_c() const noexcept { return lambda_c_; }

 private:
  double lambda_c_;
};

// The ground-state equation has no non-negative s^2 solution.
class NoSSBSolution : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

// Perturbation theory about a displaced (s != 0) vacuum is not provided.
class SSBUnsupported : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class NotConverged : public NumericalFailure {
 public:
  NotConverged(const std::string& what, double last_estimate)
      : NumericalFailure(what), last_estimate_(last_estimate) {}
  double last_estimate() const noexcept { return last_estimate_; }

 private:
  double last_estimate_;
};

}  // namespace ngas
