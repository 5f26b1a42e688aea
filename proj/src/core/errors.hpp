#pragma once

#include <stdexcept>
#include <string>

namespace syzdepth {

// Malformed or out-of-contract input (mismatched variable counts, unit
// ideals where a proper ideal is required, out-of-range densities, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation refused because the instance exceeds a configured size guard.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An invariant that the library itself guarantees was found broken.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace syzdepth
