#pragma once

#include <stdexcept>
#include <string>

namespace fractalmark {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside its documented range or shapes do not agree.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A numeric input lies outside the domain of a function, e.g. a logistic
/// map state outside (0, 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The chaotic iteration collapsed (hit 0 or 1, or produced a constant
/// digit stream). Choose different parameters.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// File could not be read, decoded, encoded or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace fractalmark
