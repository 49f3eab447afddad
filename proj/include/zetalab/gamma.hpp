#pragma once

// Gamma function routes. The classical definition is the integral
//   Gamma(s) = int_0^inf t^(s-1) e^(-t) dt,  Re(s) > 0,
// whose integration by parts gives Gamma(s+1) = s Gamma(s). The integral
// itself is not evaluated here; values come from exact closed forms, the
// Gauss limit product, and the Weierstrass product.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>

#include "zetalab/numcore/error_bound.hpp"
#include "zetalab/numcore/errors.hpp"
#include "zetalab/numcore/pi_power.hpp"
#include "zetalab/numcore/rational.hpp"
#include "zetalab/numcore/real.hpp"

namespace zetalab {

enum class GammaClass { positive_integer, half_integer, generic_real };

inline std::string_view to_string(GammaClass c) {
  switch (c) {
    case GammaClass::positive_integer: return "positive_integer";
    case GammaClass::half_integer: return "half_integer";
    case GammaClass::generic_real: return "generic_real";
  }
  return "generic_real";
}

/// A real argument held exactly as a rational, classified for the exact
/// route. Zero and the negative integers (the poles) are rejected.
class GammaArgument {
 public:
  explicit GammaArgument(BigRational s) : s_(std::move(s)) {
    if (s_.is_integer() && s_.sign() <= 0) {
      throw DomainError("Gamma has a pole at s = " + s_.to_string());
    }
    if (s_.is_integer()) {
      kind_ = GammaClass::positive_integer;
    } else if (s_.denominator() == 2) {
      kind_ = GammaClass::half_integer;
    } else {
      kind_ = GammaClass::generic_real;
    }
  }

  static GammaArgument from_real(const ApproxReal& s) { return GammaArgument(s.to_rational()); }
  static GammaArgument parse(std::string_view text) { return GammaArgument(BigRational::parse(text)); }

  const BigRational& value() const { return s_; }
  GammaClass classification() const { return kind_; }
  ApproxReal approx(long precision) const { return ApproxReal::from_rational(s_, precision); }

 private:
  BigRational s_;
  GammaClass kind_ = GammaClass::generic_real;
};

namespace detail {

inline bool exact_route_covers(const GammaArgument& s) {
  switch (s.classification()) {
    case GammaClass::positive_integer: return true;
    case GammaClass::half_integer: return s.value() >= make_rational(-1, 2);
    case GammaClass::generic_real: return false;
  }
  return false;
}

inline void require_not_pole(const ApproxReal& s) {
  if (s.is_integer() && s <= 0) throw DomainError("Gamma has a pole at s = " + s.to_string());
}

}  // namespace detail

/// Closed forms: Gamma(n) = (n-1)! for positive integers,
/// Gamma((2k+1)/2) = sqrt(pi) (2k-1)!! / 2^k for k >= 0, and
/// Gamma(-1/2) = Gamma(1/2) / (-1/2) = -2 sqrt(pi).
inline PiPowerExact gamma_exact(const GammaArgument& s) {
  const BigRational& v = s.value();
  switch (s.classification()) {
    case GammaClass::positive_integer: {
      if (!v.numerator().fits_ulong_p()) throw DomainError("argument too large for exact factorial");
      const unsigned long n = v.numerator().get_ui();
      BigInt f = 1;
      for (unsigned long k = 2; k < n; ++k) f *= k;  // Gamma(k+1) = k Gamma(k), from Gamma(1) = 1
      return {BigRational(f)};
    }
    case GammaClass::half_integer: {
      if (v < make_rational(-1, 2)) {
        throw DomainError("exact Gamma covers half-integers down to -1/2, got " + v.to_string());
      }
      if (v == make_rational(-1, 2)) return {BigRational(-2), 0, true};
      // v = (2k+1)/2
      const long k = BigInt(v.numerator() - 1).get_si() / 2;
      BigInt two_k;
      mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
      return {BigRational(double_factorial(2 * k - 1), two_k), 0, true};
    }
    case GammaClass::generic_real: break;
  }
  throw DomainError("no closed form for Gamma(" + v.to_string() + ")");
}

/// Euler's constant as the partial expression H_m - log m at index m.
struct EulerGamma {
  ApproxReal value;
  std::uint64_t m_used;
  ErrorBound error;  // always heuristic: |value(m) - value(2m)|
};

namespace detail {

inline ApproxReal harmonic_minus_log(const ApproxReal& harmonic, std::uint64_t m, bool corrected) {
  const long prec = harmonic.precision();
  const ApproxReal m_real = ApproxReal::from_integer(BigInt(static_cast<unsigned long>(m)), prec);
  ApproxReal v = harmonic - log(m_real);
  if (corrected) v -= 1 / (m_real * 2);
  return v;
}

inline EulerGamma compute_euler_constant(std::uint64_t m, long precision, bool corrected) {
  const long work = precision + kGuardBits + 2 * static_cast<long>(std::bit_width(m));
  ApproxReal harmonic(work);
  ApproxReal at_m(work);
  ApproxReal term(work);
  for (std::uint64_t k = 1; k <= 2 * m; ++k) {
    mpfr_ui_div(term.get(), 1, ApproxReal::from_integer(BigInt(static_cast<unsigned long>(k)), work).get(),
                MPFR_RNDN);
    harmonic += term;
    if (k == m) at_m = harmonic;
  }
  const ApproxReal v_m = harmonic_minus_log(at_m, m, corrected);
  const ApproxReal v_2m = harmonic_minus_log(harmonic, 2 * m, corrected);
  return {v_m.rounded(precision), m, ErrorBound::heuristic(abs(v_m - v_2m).rounded(precision))};
}

class EulerGammaCache {
 public:
  EulerGamma get(std::uint64_t m, long precision, bool corrected) {
    const auto key = std::make_tuple(m, precision, corrected);
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    EulerGamma value = compute_euler_constant(m, precision, corrected);
    std::lock_guard lock(mutex_);
    return cache_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<std::uint64_t, long, bool>, EulerGamma> cache_;
};

inline EulerGammaCache& euler_gamma_cache() {
  static EulerGammaCache cache;
  return cache;
}

}  // namespace detail

/// gamma ~ 1 + 1/2 + ... + 1/m - log m. With `corrected`, subtracts 1/(2m),
/// which removes the leading O(1/m) term of the error.
inline EulerGamma euler_constant(std::uint64_t m, long precision = kDefaultPrecision, bool corrected = false) {
  check_precision(precision);
  if (m == 0) throw DomainError("euler_constant needs m >= 1");
  return detail::euler_gamma_cache().get(m, precision, corrected);
}

/// Gauss product Gamma_h(s) = h! h^s / (s (s+1) ... (s+h))
///                        = h^s / (s (1+s)(1+s/2)...(1+s/h)).
/// Heuristic error |Gamma_h - Gamma_{h/2}| (against Gamma_2 when h = 1).
inline BoundedValue gamma_gauss(const ApproxReal& s, std::uint64_t h, long precision = kDefaultPrecision) {
  check_precision(precision);
  if (!(s > 0)) throw DomainError("Gauss product needs s > 0, got " + s.to_string());
  if (h == 0) throw DomainError("Gauss product needs h >= 1");
  const long work = precision + kGuardBits + static_cast<long>(std::bit_width(h));
  const ApproxReal sw = s.rounded(work);
  const auto gauss_at = [&](std::uint64_t j, const ApproxReal& denominator) {
    const ApproxReal jr = ApproxReal::from_integer(BigInt(static_cast<unsigned long>(j)), work);
    return pow(jr, sw) / denominator;
  };
  const std::uint64_t checkpoint = h >= 2 ? h / 2 : 2;
  const std::uint64_t last = std::max(h, checkpoint);
  ApproxReal denominator = sw;
  ApproxReal value(work);
  ApproxReal reference(work);
  for (std::uint64_t k = 1; k <= last; ++k) {
    denominator *= 1 + sw / static_cast<long>(k);
    if (k == h) value = gauss_at(h, denominator);
    if (k == checkpoint) reference = gauss_at(checkpoint, denominator);
  }
  return {value.rounded(precision), ErrorBound::heuristic(abs(value - reference).rounded(precision))};
}

/// Weierstrass product 1/Gamma(s) = s e^(gamma s) prod_{n>=1} (1 + s/n) e^(-s/n),
/// truncated at n_terms. The exponential factors collapse to e^(-s H_n).
///
/// Error: for n_terms + 1 > 2|s| the log of the omitted factors is bounded by
/// s^2 / (2 (1 - |s|/(n+1)) n); the uncertainty of gamma (itself heuristic)
/// adds |s| dgamma. Otherwise falls back to |Gamma_n - Gamma_{n/2}|.
inline BoundedValue gamma_weierstrass(const ApproxReal& s, std::uint64_t n_terms,
                                      long precision = kDefaultPrecision) {
  check_precision(precision);
  detail::require_not_pole(s);
  if (n_terms == 0) throw DomainError("Weierstrass product needs n_terms >= 1");
  const long work = precision + kGuardBits + static_cast<long>(std::bit_width(n_terms));
  const EulerGamma euler = euler_constant(std::max<std::uint64_t>(n_terms, 1000), work, true);
  const ApproxReal sw = s.rounded(work);

  const std::uint64_t checkpoint = std::max<std::uint64_t>(n_terms / 2, 1);
  ApproxReal harmonic(work);
  ApproxReal product(1, work);
  ApproxReal at_checkpoint(work);
  for (std::uint64_t k = 1; k <= n_terms; ++k) {
    const ApproxReal inv_k = 1 / ApproxReal::from_integer(BigInt(static_cast<unsigned long>(k)), work);
    harmonic += inv_k;
    product *= 1 + sw * inv_k;
    if (k == checkpoint) at_checkpoint = 1 / (sw * exp(sw * (euler.value - harmonic)) * product);
  }
  const ApproxReal reciprocal = sw * exp(sw * (euler.value - harmonic)) * product;
  if (reciprocal.is_zero()) throw DomainError("Weierstrass product vanished at s = " + s.to_string());
  const ApproxReal value = 1 / reciprocal;

  const ApproxReal abs_s = abs(sw);
  const ApproxReal n_real = ApproxReal::from_integer(BigInt(static_cast<unsigned long>(n_terms)), work);
  // The m vs 2m gap of the corrected constant is 3/4 of its O(1/m^2) error;
  // doubling it covers the true error.
  const ApproxReal gamma_part = abs_s * euler.error.bound() * 2;
  ApproxReal bound(work);
  if (abs_s * 2 < n_real + 1) {
    const ApproxReal tail_log = sw * sw / ((1 - abs_s / (n_real + 1)) * n_real * 2);
    bound = abs(value) * expm1(tail_log + gamma_part);
  } else {
    bound = abs(value - at_checkpoint) + abs(value) * expm1(gamma_part);
  }
  return {value.rounded(precision), ErrorBound::heuristic(bound.rounded(precision))};
}

struct GammaOptions {
  std::uint64_t weierstrass_terms = 100000;
};

/// Dispatcher. Closed form when available; otherwise shifts s by an integer
/// k into [1/2, 3/2) using Gamma(s+1) = s Gamma(s), with the shift factor kept
/// as an exact rational, and evaluates the Weierstrass product there.
inline BoundedValue gamma(const GammaArgument& s, long precision = kDefaultPrecision, GammaOptions options = {}) {
  check_precision(precision);
  const auto exact_value = [&](const GammaArgument& arg) {
    ApproxReal v = pi_power_eval(gamma_exact(arg), precision);
    ApproxReal err = ulp(v);
    return BoundedValue{std::move(v), ErrorBound::rigorous(std::move(err))};
  };
  const BigRational& v = s.value();
  if (v.abs() > BigRational(1000000)) throw DomainError("Gamma dispatcher supports |s| <= 1e6");
  if (detail::exact_route_covers(s)) return exact_value(s);

  const BigRational half = make_rational(1, 2);
  // k = ceil(1/2 - s)
  const BigRational target = half - v;
  BigInt k_int;
  mpz_cdiv_q(k_int.get_mpz_t(), target.numerator().get_mpz_t(), target.denominator().get_mpz_t());
  const long k = k_int.get_si();
  const BigRational t = v + BigRational(k);

  BigRational factor(1);
  if (k > 0) {
    for (long i = 0; i < k; ++i) factor /= v + BigRational(i);
  } else {
    for (long i = 1; i <= -k; ++i) factor *= v - BigRational(i);
  }

  const GammaArgument shifted(t);
  BoundedValue inner = detail::exact_route_covers(shifted)
                           ? exact_value(shifted)
                           : gamma_weierstrass(shifted.approx(precision + kGuardBits), options.weierstrass_terms,
                                               precision + kGuardBits);
  ApproxReal value = (inner.value * factor).rounded(precision);
  ApproxReal bound = (inner.error.bound() * factor.abs()).rounded(precision) + ulp(value);
  return {std::move(value), ErrorBound(std::move(bound), inner.error.kind())};
}

}  // namespace zetalab
