#pragma once

#include <stdexcept>
#include <string>

namespace horizon {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A return-function evaluation was requested outside its domain.
/// Carries the time index of the offending transition (-1 if not applicable).
class FeasibilityError : public Error {
 public:
  FeasibilityError(const std::string& what, int t = -1) : Error(what), t_(t) {}
  int time_index() const { return t_; }

 private:
  int t_;
};

/// Expression evaluation hit an undefined operation (ln/sqrt domain,
/// division by zero, non-finite power, unbound parameter).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Expression text could not be parsed. Carries the byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Model parameters outside their admissible ranges, or unknown model name.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A path failed the attainability check where one was required.
/// Carries the first violating time index.
class AttainabilityError : public Error {
 public:
  AttainabilityError(const std::string& what, int index)
      : Error(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

/// Sequence/window size preconditions (empty series, window too large,
/// truncation horizon past the end of a path, schedule shape).
class SizeError : public Error {
 public:
  using Error::Error;
};

/// File input/output and format problems (CSV shape, JSON spec fields).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace horizon
