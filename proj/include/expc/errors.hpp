#pragma once

#include <stdexcept>
#include <string>

namespace expc {

// Malformed input: bad files, inconsistent lengths, zero or unit ideals.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input outside an operation's domain (a point off the variety,
// a face not in the complex, a positive-dimensional quotient).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace expc
