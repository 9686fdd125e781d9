/**
 * @file    errors.hpp
 * @brief   Error categories shared by all modules
 */
#pragma once

#include <stdexcept>
#include <string>

namespace gmlab {

/// A precondition of an operation was violated by the caller.
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// Input outside the domain where an operation is defined.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A self-check inside the library failed; indicates a regression.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ContractViolation(what);
}

}  // namespace gmlab
