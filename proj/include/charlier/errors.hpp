#pragma once

#include <stdexcept>
#include <string>

namespace charlier {

/// Invalid argument to a numerical routine (non-positive parameter, negative degree, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by the explicit hypergeometric evaluator when one of its
/// parameter denominators vanishes. Callers should fall back to the
/// ladder route, which has no such restriction.
class SingularParameters : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A lattice function was read outside the region where it is defined:
/// below the lattice (negative coordinate) or past a finite backing window.
class OutOfDomain : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace charlier
