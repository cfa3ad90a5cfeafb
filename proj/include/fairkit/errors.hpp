#pragma once

#include <stdexcept>

namespace fairkit {

// Base for every domain-constraint violation; the CLI maps this family to a
// single exit status distinct from parse and I/O failures.
class DomainError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Allocation vectors must be non-empty, finite, non-negative, not all zero.
class InvalidAllocation : public DomainError {
  using DomainError::DomainError;
};

// Demands must be strictly positive and match the allocation length.
class InvalidDemand : public DomainError {
  using DomainError::DomainError;
};

// Generalized-index exponents must be finite and greater than 1.
class InvalidExponent : public DomainError {
  using DomainError::DomainError;
};

// Transfers need distinct valid indices, a positive amount, and a
// non-negative source balance after the move.
class InvalidTransfer : public DomainError {
  using DomainError::DomainError;
};

// Removing user j must leave at least one positive value behind.
class DegenerateRemainder : public DomainError {
  using DomainError::DomainError;
};

// Bound/window scenario parameters out of range.
class InvalidScenario : public DomainError {
  using DomainError::DomainError;
};

// Distribution parameters out of range, or too few Monte Carlo samples.
class InvalidDistribution : public DomainError {
  using DomainError::DomainError;
};

}  // namespace fairkit
