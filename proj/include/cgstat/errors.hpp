#pragma once

#include <stdexcept>
#include <string>

namespace cgstat {

// Mathematically undefined operation (inverse of zero, log of zero, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Caller passed parameters outside an operation's contract.
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A size cap would be exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generator data or an internal consistency check failed.
struct ConstructionError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace cgstat
