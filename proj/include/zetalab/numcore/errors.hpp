#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

/// Raised when an argument lies outside the domain of an operation
/// (poles, Re(s) <= 1, zero denominators, precision below the floor).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace zetalab
