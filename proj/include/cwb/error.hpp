#pragma once

#include <stdexcept>
#include <string>

namespace cwb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user data: duplicate names, unknown points, bad relations.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A size cap on enumeration or exhaustive search was exceeded.
class CapError : public Error {
 public:
  using Error::Error;
};

}  // namespace cwb
