#pragma once

#include <stdexcept>
#include <string>

namespace binomrep {

/// An operation was called outside its documented domain (e.g. y <= a for a bracket).
class PreconditionViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The mathematical object requested does not exist as a finite value (e.g. N(1)).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ZeroPolynomial : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A step that cannot fail for valid input did fail. Indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace binomrep
