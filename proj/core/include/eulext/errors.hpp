#pragma once

#include <stdexcept>
#include <string>

namespace eulext {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input data (vertex ids, files, matrices).
class InputError : public Error {
 public:
  using Error::Error;
};

// A mutation or query was called outside its contract (existing edge, u == v).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Numeric parameters outside their admissible ranges.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace eulext
