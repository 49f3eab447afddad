#pragma once

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "zetalab/numcore/errors.hpp"

namespace zetalab {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is 0/1.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& value) : q_(value) {}  // NOLINT(google-explicit-constructor)

  BigRational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw DomainError("rational with zero denominator");
    q_.get_num() = numerator;
    q_.get_den() = denominator;
    q_.canonicalize();
  }

  explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Accepts "p", "p/q", and plain decimal literals such as "-2.5" or "1e-3";
  /// decimals convert exactly.
  static BigRational parse(std::string_view text);

  const BigInt& numerator() const { return q_.get_num(); }
  const BigInt& denominator() const { return q_.get_den(); }
  const mpq_class& get() const { return q_; }
  mpq_srcptr get_mpq_t() const { return q_.get_mpq_t(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// "-691/2730"; the denominator is omitted when it is 1.
  std::string to_string() const { return q_.get_str(); }

  BigRational operator-() const { return BigRational(mpq_class(-q_)); }
  BigRational abs() const { return BigRational(mpq_class(::abs(q_))); }

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

inline BigRational make_rational(const BigInt& num, const BigInt& den) { return BigRational(num, den); }
inline BigRational make_rational(long num, long den) { return BigRational(BigInt(num), BigInt(den)); }

inline BigRational pow(const BigRational& base, unsigned long exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
  return BigRational(num, den);
}

inline BigRational BigRational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  auto bad = [&]() { return DomainError("malformed number '" + s + "'"); };

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    BigInt num, den;
    if (num.set_str(s.substr(0, slash), 10) != 0) throw bad();
    if (den.set_str(s.substr(slash + 1), 10) != 0) throw bad();
    return BigRational(num, den);
  }

  // Decimal literal: [sign] digits [. digits] [e|E [sign] digits]
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_digit = false;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
    digits += s[i];
    seen_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    for (++i; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      digits += s[i];
      --scale;
      seen_digit = true;
    }
  }
  if (!seen_digit) throw bad();
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    const std::string exp_text = s.substr(i);
    if (exp_text.empty()) throw bad();
    std::size_t used = 0;
    long exponent = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != exp_text.size() || exponent > 100000 || exponent < -100000) throw bad();
    scale += exponent;
    i = s.size();
  }
  if (i != s.size()) throw bad();

  BigInt num(digits, 10);
  if (negative) num = -num;
  BigInt ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  return scale < 0 ? BigRational(num, ten_power) : BigRational(BigInt(num * ten_power));
}

/// C(n, k) by the multiplicative formula, exact.
inline BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (unsigned long j = 0; j < k; ++j) {
    c *= n - j;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), j + 1);
  }
  return c;
}

/// n!! = n(n-2)(n-4)... stopping at 1 or 2. The empty products 0!! and
/// (-1)!! are 1.
inline BigInt double_factorial(long n) {
  if (n < -1) throw DomainError("double factorial undefined for n < -1");
  BigInt result = 1;
  for (long k = n; k > 1; k -= 2) result *= k;
  return result;
}

}  // namespace zetalab
