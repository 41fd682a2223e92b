#pragma once

#include <stdexcept>
#include <string>

namespace ppi {

// Argument outside the mathematical domain of an operation (probability
// outside [0,1], negative weight, mismatched shapes, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// The inputs are individually valid but violate a stated precondition of the
// operation, e.g. a structure that is not private private.
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

// A computation would exceed its documented size budget.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ppi
