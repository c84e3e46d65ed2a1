#pragma once

#include <stdexcept>

namespace affiliation {

// Malformed or inconsistent user-supplied data. The CLI maps it to exit status 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller broke an internal precondition. The CLI maps it to exit status 2.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace affiliation
