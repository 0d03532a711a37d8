#ifndef UAVSEARCH_ERRORS_HPP
#define UAVSEARCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace uavsearch {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidCamera : public Error {
 public:
  using Error::Error;
};

class InvalidArea : public Error {
 public:
  using Error::Error;
};

class InvalidDistribution : public Error {
 public:
  using Error::Error;
};

class InvalidMap : public Error {
 public:
  using Error::Error;
};

class InvalidSensor : public Error {
 public:
  using Error::Error;
};

/// Raised when a Bayes update would divide by zero, i.e. the observation
/// contradicts a map that assigned it probability zero.
class DegeneratePosterior : public Error {
 public:
  using Error::Error;
};

/// Raised by closed forms whose expectation diverges (e_d = 1).
class DivergentExpectation : public Error {
 public:
  using Error::Error;
};

class PlannerStuck : public Error {
 public:
  using Error::Error;
};

class InvalidSpeed : public Error {
 public:
  using Error::Error;
};

class InvalidTrajectory : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace uavsearch

#endif  // UAVSEARCH_ERRORS_HPP
