#pragma once

#include <regex>
#include <string>
#include <string_view>
#include <utility>

#include "zetalab/numcore/errors.hpp"
#include "zetalab/numcore/rational.hpp"
#include "zetalab/numcore/real.hpp"

namespace zetalab {

/// Exact value coefficient * pi^pi_exponent * (sqrt(pi) if sqrt_pi).
/// Zero is canonical: 0 with exponent 0 and no sqrt(pi) factor.
class PiPowerExact {
 public:
  PiPowerExact() = default;
  PiPowerExact(BigRational coefficient, unsigned pi_exponent = 0, bool sqrt_pi = false)  // NOLINT
      : coefficient_(std::move(coefficient)), pi_exponent_(pi_exponent), sqrt_pi_(sqrt_pi) {
    if (coefficient_.is_zero()) {
      pi_exponent_ = 0;
      sqrt_pi_ = false;
    }
  }

  const BigRational& coefficient() const { return coefficient_; }
  unsigned pi_exponent() const { return pi_exponent_; }
  bool sqrt_pi() const { return sqrt_pi_; }
  bool is_zero() const { return coefficient_.is_zero(); }

  /// "c", "c * pi^k", "c * sqrt(pi)", or "c * sqrt(pi) * pi^k".
  std::string to_string() const {
    std::string out = coefficient_.to_string();
    if (sqrt_pi_) out += " * sqrt(pi)";
    if (pi_exponent_ != 0) out += " * pi^" + std::to_string(pi_exponent_);
    return out;
  }

  static PiPowerExact parse(std::string_view text) {
    static const std::regex pattern(R"(^([-+]?[0-9]+(?:/[0-9]+)?)( \* sqrt\(pi\))?(?: \* pi\^([0-9]+))?$)");
    std::smatch m;
    const std::string s(text);
    if (!std::regex_match(s, m, pattern)) throw DomainError("malformed pi-power value '" + s + "'");
    const unsigned exponent = m[3].matched ? static_cast<unsigned>(std::stoul(m[3].str())) : 0U;
    return {BigRational::parse(m[1].str()), exponent, m[2].matched};
  }

  friend PiPowerExact operator*(const PiPowerExact& a, const PiPowerExact& b) {
    // sqrt(pi) * sqrt(pi) = pi
    const bool both = a.sqrt_pi_ && b.sqrt_pi_;
    return {a.coefficient_ * b.coefficient_, a.pi_exponent_ + b.pi_exponent_ + (both ? 1U : 0U),
            a.sqrt_pi_ != b.sqrt_pi_};
  }
  friend PiPowerExact operator*(const PiPowerExact& a, const BigRational& r) {
    return {a.coefficient_ * r, a.pi_exponent_, a.sqrt_pi_};
  }

  friend bool operator==(const PiPowerExact& a, const PiPowerExact& b) {
    return a.coefficient_ == b.coefficient_ && a.pi_exponent_ == b.pi_exponent_ && a.sqrt_pi_ == b.sqrt_pi_;
  }

 private:
  BigRational coefficient_;
  unsigned pi_exponent_ = 0;
  bool sqrt_pi_ = false;
};

/// Decimal value of an exact pi-power form. Evaluated with kGuardBits extra
/// bits then rounded once, so the result is within one ulp at `precision`.
inline ApproxReal pi_power_eval(const PiPowerExact& x, long precision = kDefaultPrecision) {
  check_precision(precision);
  if (x.is_zero()) return ApproxReal(precision);
  const long work = precision + kGuardBits;
  const ApproxReal p = pi(work);
  ApproxReal value = pow(p, static_cast<long>(x.pi_exponent()));
  if (x.sqrt_pi()) value *= sqrt(p);
  value *= x.coefficient();
  return value.rounded(precision);
}

}  // namespace zetalab
