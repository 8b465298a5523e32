#pragma once

#include <stdexcept>
#include <string>

namespace pathsense {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class GraphNotConnected : public Error {
 public:
  using Error::Error;
};

class InvalidWalk : public Error {
 public:
  using Error::Error;
};

class EmptyMatrix : public Error {
 public:
  using Error::Error;
};

class InvalidProblem : public Error {
 public:
  using Error::Error;
};

class SolverStalled : public Error {
 public:
  using Error::Error;
};

class NoSolution : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed input file; carries the 1-based line number where parsing failed.
class IoError : public Error {
 public:
  IoError(const std::string& path, long line, const std::string& what)
      : Error(path + ":" + std::to_string(line) + ": " + what), line_(line) {}
  explicit IoError(const std::string& what) : Error(what), line_(0) {}
  long line() const { return line_; }

 private:
  long line_;
};

}  // namespace pathsense
