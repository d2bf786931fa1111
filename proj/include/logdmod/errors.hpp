#pragma once

#include <stdexcept>
#include <string>

namespace logdmod {

// Input rejected by a precondition (non-reduced divisor, f(0) != 0, syntax).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two independent computations disagree; indicates an engine defect or a
// local-versus-global caveat that the caller must look at.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace logdmod
