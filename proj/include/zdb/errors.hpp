#pragma once

#include <stdexcept>
#include <string>

namespace zdb {

/// Element index out of range, zero where a nonzero element is required, and similar misuse.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotAUnitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction precondition (unit-difference condition, subgroup sizes, ...) does not hold.
/// The message names the violated clause.
class ConditionNotSatisfied : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// G already contains -1, so G u (-G) = G.
class DegenerateDoubling : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotCwcEligible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnverifiedFunction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RecipeHypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zdb
