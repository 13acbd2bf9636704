#pragma once

#include <stdexcept>
#include <string>

namespace hlb {

/// Input lies outside the range where an operation is defined.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A formula degenerates at this input (e.g. a vanishing denominator).
class DegenerateDomainError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Malformed external input (files, command-line values).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace hlb
