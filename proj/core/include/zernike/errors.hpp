#pragma once

#include <stdexcept>
#include <string>

namespace zernike {

/// An operation was called outside its mathematical domain.
class domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A computed object violates one of its structural invariants.
class integrity_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Exact addition was attempted on values outside the closed i^k q sqrt(s) set.
class incompatible_radicals : public domain_error {
public:
  using domain_error::domain_error;
};

} // namespace zernike
