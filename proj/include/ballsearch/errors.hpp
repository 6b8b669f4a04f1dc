#pragma once

#include <stdexcept>

namespace ballsearch {

/// A mathematically invalid input: disconnected graph where connectivity is
/// required, a cover that does not cover, a candidate set that is too small.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph or code file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A strategy broke the game contract (query outside the radius constraint,
/// query with an invalid center, or no progress within the query guard).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ballsearch
