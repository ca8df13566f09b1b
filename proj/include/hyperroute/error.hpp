#pragma once

#include <stdexcept>
#include <string>

namespace hyperroute {

// Invalid arguments to a builder or operation.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A randomized construction exhausted its retry budget.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input exceeds a resource budget (e.g. dense eigensolve size).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A formula was evaluated outside the region where it is meaningful.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace hyperroute
