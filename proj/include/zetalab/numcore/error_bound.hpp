#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "zetalab/numcore/errors.hpp"
#include "zetalab/numcore/real.hpp"

namespace zetalab {

/// rigorous_tail: derived from a stated inequality (integral test, geometric
/// tail). heuristic: derived from differencing or extrapolation.
enum class BoundKind { rigorous_tail, heuristic };

inline std::string_view to_string(BoundKind kind) {
  return kind == BoundKind::rigorous_tail ? "rigorous_tail" : "heuristic";
}

/// Realizes |f - g| <= C|h|: the bound is the value of C|h| at the
/// truncation point in use.
class ErrorBound {
 public:
  ErrorBound(ApproxReal bound, BoundKind kind) : bound_(std::move(bound)), kind_(kind) {
    if (bound_.sign() < 0 || !bound_.is_finite()) throw DomainError("error bound must be finite and nonnegative");
  }

  static ErrorBound rigorous(ApproxReal bound) { return {std::move(bound), BoundKind::rigorous_tail}; }
  static ErrorBound heuristic(ApproxReal bound) { return {std::move(bound), BoundKind::heuristic}; }

  const ApproxReal& bound() const { return bound_; }
  BoundKind kind() const { return kind_; }

 private:
  ApproxReal bound_;
  BoundKind kind_;
};

/// A value paired with how far it may be from the quantity it approximates.
template <class Value>
struct Bounded {
  Value value;
  ErrorBound error;
};

using BoundedValue = Bounded<ApproxReal>;
using BoundedComplex = Bounded<ApproxComplex>;

}  // namespace zetalab
