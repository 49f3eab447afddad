#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>

#include "zetalab/numcore/errors.hpp"
#include "zetalab/numcore/rational.hpp"

namespace zetalab {

// Precision is always a count of binary significand digits.
inline constexpr long kMinPrecision = 32;
inline constexpr long kDefaultPrecision = 128;

// Extra bits carried internally by long sums and products before the result
// is rounded back to the caller's precision.
inline constexpr long kGuardBits = 32;

inline void check_precision(long bits) {
  if (bits < kMinPrecision) {
    throw DomainError("working precision must be at least " + std::to_string(kMinPrecision) +
                      " bits, got " + std::to_string(bits));
  }
  if (bits > static_cast<long>(MPFR_PREC_MAX) / 2) throw DomainError("working precision too large");
}

/// Arbitrary-precision real number. Every arithmetic operation rounds to
/// nearest, so each result is within half an ulp of the exact operation on
/// its (already rounded) inputs. Binary operations produce a result at the
/// larger of the two operand precisions.
class ApproxReal {
 public:
  explicit ApproxReal(long precision = kDefaultPrecision) {
    check_precision(precision);
    mpfr_init2(v_, precision);
    mpfr_set_zero(v_, 1);
  }
  ApproxReal(long value, long precision) : ApproxReal(precision) { mpfr_set_si(v_, value, MPFR_RNDN); }

  static ApproxReal from_double(double value, long precision = kDefaultPrecision) {
    ApproxReal r(precision);
    mpfr_set_d(r.v_, value, MPFR_RNDN);
    return r;
  }
  static ApproxReal from_rational(const BigRational& q, long precision = kDefaultPrecision) {
    ApproxReal r(precision);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
  }
  static ApproxReal from_integer(const BigInt& z, long precision = kDefaultPrecision) {
    ApproxReal r(precision);
    mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
    return r;
  }

  ApproxReal(const ApproxReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  ApproxReal(ApproxReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  ApproxReal& operator=(const ApproxReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ApproxReal& operator=(ApproxReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~ApproxReal() { mpfr_clear(v_); }

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  /// Same value rounded to a new precision.
  ApproxReal rounded(long precision) const {
    ApproxReal r(precision);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Exact value as a rational (binary floats are dyadic rationals).
  BigRational to_rational() const {
    if (!is_finite()) throw DomainError("non-finite value has no rational form");
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return BigRational(q);
  }

  /// %g-style rendering with the given number of significant digits.
  std::string to_string(int digits = 15) const {
    char* buffer = nullptr;
    mpfr_asprintf(&buffer, "%.*RNg", std::max(digits, 1), v_);
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
  }

  ApproxReal operator-() const {
    ApproxReal r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  ApproxReal& operator+=(const ApproxReal& o) { return assign_binary(o, mpfr_add); }
  ApproxReal& operator-=(const ApproxReal& o) { return assign_binary(o, mpfr_sub); }
  ApproxReal& operator*=(const ApproxReal& o) { return assign_binary(o, mpfr_mul); }
  ApproxReal& operator/=(const ApproxReal& o) { return assign_binary(o, mpfr_div); }
  ApproxReal& operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
  ApproxReal& operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
  ApproxReal& operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
  ApproxReal& operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }
  ApproxReal& operator*=(const BigRational& q) { mpfr_mul_q(v_, v_, q.get_mpq_t(), MPFR_RNDN); return *this; }

  friend ApproxReal operator+(ApproxReal a, const ApproxReal& b) { return a += b; }
  friend ApproxReal operator-(ApproxReal a, const ApproxReal& b) { return a -= b; }
  friend ApproxReal operator*(ApproxReal a, const ApproxReal& b) { return a *= b; }
  friend ApproxReal operator/(ApproxReal a, const ApproxReal& b) { return a /= b; }
  friend ApproxReal operator+(ApproxReal a, long b) { return a += b; }
  friend ApproxReal operator-(ApproxReal a, long b) { return a -= b; }
  friend ApproxReal operator*(ApproxReal a, long b) { return a *= b; }
  friend ApproxReal operator/(ApproxReal a, long b) { return a /= b; }
  friend ApproxReal operator*(ApproxReal a, const BigRational& b) { return a *= b; }
  friend ApproxReal operator+(long a, ApproxReal b) { return b += a; }
  friend ApproxReal operator*(long a, ApproxReal b) { return b *= a; }
  friend ApproxReal operator-(long a, const ApproxReal& b) {
    ApproxReal r(b.precision());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend ApproxReal operator/(long a, const ApproxReal& b) {
    ApproxReal r(b.precision());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const ApproxReal& a, const ApproxReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const ApproxReal& a, const ApproxReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const ApproxReal& a, const ApproxReal& b) { return b < a; }
  friend bool operator<=(const ApproxReal& a, const ApproxReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const ApproxReal& a, const ApproxReal& b) { return b <= a; }
  friend bool operator<(const ApproxReal& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const ApproxReal& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<=(const ApproxReal& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>=(const ApproxReal& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
  friend bool operator==(const ApproxReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

 private:
  template <class Op>
  ApproxReal& assign_binary(const ApproxReal& o, Op op) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    op(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  mpfr_t v_;
};

namespace detail {
template <class Op>
ApproxReal unary(const ApproxReal& x, Op op) {
  ApproxReal r(x.precision());
  op(r.get(), x.get(), MPFR_RNDN);
  return r;
}
}  // namespace detail

inline ApproxReal abs(const ApproxReal& x) { return detail::unary(x, mpfr_abs); }
inline ApproxReal sqrt(const ApproxReal& x) { return detail::unary(x, mpfr_sqrt); }
inline ApproxReal exp(const ApproxReal& x) { return detail::unary(x, mpfr_exp); }
inline ApproxReal expm1(const ApproxReal& x) { return detail::unary(x, mpfr_expm1); }
inline ApproxReal log(const ApproxReal& x) { return detail::unary(x, mpfr_log); }
inline ApproxReal log1p(const ApproxReal& x) { return detail::unary(x, mpfr_log1p); }
inline ApproxReal sin(const ApproxReal& x) { return detail::unary(x, mpfr_sin); }
inline ApproxReal cos(const ApproxReal& x) { return detail::unary(x, mpfr_cos); }
inline ApproxReal tan(const ApproxReal& x) { return detail::unary(x, mpfr_tan); }
inline ApproxReal cot(const ApproxReal& x) { return detail::unary(x, mpfr_cot); }

inline ApproxReal pow(const ApproxReal& base, const ApproxReal& exponent) {
  ApproxReal r(std::max(base.precision(), exponent.precision()));
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  return r;
}
inline ApproxReal pow(const ApproxReal& base, long exponent) {
  ApproxReal r(base.precision());
  mpfr_pow_si(r.get(), base.get(), exponent, MPFR_RNDN);
  return r;
}
inline ApproxReal max(const ApproxReal& a, const ApproxReal& b) { return a < b ? b : a; }

/// x * 2^e, exact up to final rounding.
inline ApproxReal ldexp(const ApproxReal& x, long e) {
  ApproxReal r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

inline ApproxReal pi(long precision = kDefaultPrecision) {
  ApproxReal r(precision);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

/// One unit in the last place of x at its own precision; for zero, the ulp
/// of 1.
inline ApproxReal ulp(const ApproxReal& x) {
  ApproxReal r(1, x.precision());
  const long e = x.is_zero() ? 1 : static_cast<long>(mpfr_get_exp(x.get()));
  return ldexp(r, e - x.precision());
}

/// 2^(-bits) at the given precision.
inline ApproxReal unit_roundoff(long precision) { return ldexp(ApproxReal(1, precision), -precision); }

/// Parse a decimal or "p/q" literal at the given precision.
inline ApproxReal parse_real(std::string_view text, long precision = kDefaultPrecision) {
  return ApproxReal::from_rational(BigRational::parse(text), precision);
}

/// Minimal complex number over ApproxReal, enough for Dirichlet sums and
/// Euler products at complex arguments.
struct ApproxComplex {
  ApproxReal re;
  ApproxReal im;

  explicit ApproxComplex(long precision = kDefaultPrecision) : re(precision), im(precision) {}
  ApproxComplex(ApproxReal real, ApproxReal imag) : re(std::move(real)), im(std::move(imag)) {}

  long precision() const { return std::max(re.precision(), im.precision()); }

  ApproxComplex& operator+=(const ApproxComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ApproxComplex& operator-=(const ApproxComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend ApproxComplex operator+(ApproxComplex a, const ApproxComplex& b) { return a += b; }
  friend ApproxComplex operator-(ApproxComplex a, const ApproxComplex& b) { return a -= b; }
  friend ApproxComplex operator*(const ApproxComplex& a, const ApproxComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ApproxComplex operator/(const ApproxComplex& a, const ApproxComplex& b) {
    const ApproxReal d = b.re * b.re + b.im * b.im;
    if (d.is_zero()) throw DomainError("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
};

inline ApproxReal abs(const ApproxComplex& z) {
  ApproxReal r(z.precision());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

inline ApproxComplex rounded(const ApproxComplex& z, long precision) {
  return {z.re.rounded(precision), z.im.rounded(precision)};
}

}  // namespace zetalab
