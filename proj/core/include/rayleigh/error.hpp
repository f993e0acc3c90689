#pragma once

#include <stdexcept>
#include <string>

namespace rayleigh {

/// Domain or contract violation (bad element, invalid family spec, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance exceeds the desk-scale resource guardrails.
class SizeError : public Error {
 public:
  using Error::Error;
};

}  // namespace rayleigh
