#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "zetalab/bernoulli.hpp"
#include "zetalab/numcore/error_bound.hpp"
#include "zetalab/numcore/errors.hpp"
#include "zetalab/numcore/pi_power.hpp"
#include "zetalab/numcore/primes.hpp"
#include "zetalab/numcore/rational.hpp"
#include "zetalab/numcore/real.hpp"

namespace zetalab {

/// Argument s = re + i*im of the zeta series. Every numerical evaluator
/// requires re > 1.
struct ZetaArgument {
  ApproxReal re;
  ApproxReal im;

  explicit ZetaArgument(ApproxReal real) : re(std::move(real)), im(re.precision()) {}
  ZetaArgument(ApproxReal real, ApproxReal imag) : re(std::move(real)), im(std::move(imag)) {}

  bool is_real() const { return im.is_zero(); }
};

namespace detail {
inline void require_convergent(const ApproxReal& s_real) {
  if (!(s_real > 1)) throw DomainError("zeta series needs Re(s) > 1, got " + s_real.to_string());
}
}  // namespace detail

/// zeta(2n) = (-1)^(n-1) (2 pi)^(2n) B_{2n} / (2 (2n)!) as an exact
/// rational multiple of pi^(2n).
inline PiPowerExact zeta_even_exact(unsigned n) {
  if (n == 0) throw DomainError("zeta_even_exact needs n >= 1");
  BigInt two_n_factorial = 1;
  for (unsigned long k = 2; k <= 2UL * n; ++k) two_n_factorial *= k;
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2UL * n);
  BigRational c = BigRational(two_pow) * bernoulli(2 * n) / BigRational(BigInt(2 * two_n_factorial));
  if (n % 2 == 0) c = -c;
  return {c, 2 * n, false};
}

/// Integral-test tail: sum_{n>N} n^(-s) <= N^(1-s) / (s - 1). For complex s
/// pass Re(s); the bound covers the modulus of the tail.
inline ErrorBound zeta_tail_bound(const ApproxReal& s_real, std::uint64_t terms) {
  detail::require_convergent(s_real);
  if (terms == 0) throw DomainError("zeta_tail_bound needs N >= 1");
  const long prec = s_real.precision() + kGuardBits;
  const ApproxReal s = s_real.rounded(prec);
  const ApproxReal n = ApproxReal::from_integer(BigInt(static_cast<unsigned long>(terms)), prec);
  const ApproxReal bound = pow(n, 1 - s) / (s - 1);
  return ErrorBound::rigorous(bound.rounded(s_real.precision()));
}

/// Partial Dirichlet sum sum_{n=1}^{terms} n^(-s) with its integral-test tail.
/// The bound covers truncation; rounding (at most a few ulps per term at
/// precision + kGuardBits) is far below the slack in the integral test.
inline BoundedValue zeta_dirichlet(const ApproxReal& s, std::uint64_t terms, long precision = kDefaultPrecision) {
  check_precision(precision);
  detail::require_convergent(s);
  if (terms == 0) throw DomainError("zeta_dirichlet needs at least one term");
  const long work = precision + kGuardBits;
  const ApproxReal neg_s = -s.rounded(work);
  ApproxReal sum(work);
  ApproxReal n(work);
  for (std::uint64_t k = 1; k <= terms; ++k) {
    mpfr_set_ui(n.get(), k, MPFR_RNDN);
    sum += pow(n, neg_s);
  }
  return {sum.rounded(precision), zeta_tail_bound(s.rounded(precision), terms)};
}

/// Complex form: n^(-s) = n^(-sigma) (cos(t ln n) - i sin(t ln n)).
inline BoundedComplex zeta_dirichlet(const ZetaArgument& s, std::uint64_t terms, long precision = kDefaultPrecision) {
  check_precision(precision);
  detail::require_convergent(s.re);
  if (terms == 0) throw DomainError("zeta_dirichlet needs at least one term");
  const long work = precision + kGuardBits;
  const ApproxReal sigma = s.re.rounded(work);
  const ApproxReal t = s.im.rounded(work);
  ApproxComplex sum(work);
  ApproxReal n(work);
  for (std::uint64_t k = 1; k <= terms; ++k) {
    mpfr_set_ui(n.get(), k, MPFR_RNDN);
    const ApproxReal log_n = log(n);
    const ApproxReal magnitude = exp(-sigma * log_n);
    const ApproxReal phase = t * log_n;
    sum.re += magnitude * cos(phase);
    sum.im -= magnitude * sin(phase);
  }
  return {rounded(sum, precision), zeta_tail_bound(s.re.rounded(precision), terms)};
}

/// Partial sums of |a_n| must rise by less than this over the final quarter
/// of the supplied terms.
inline constexpr double kProductCheckEpsilon = 1e-3;

/// Runtime form of "sum |a_n| converges => prod (1 + a_n) converges": true
/// when the partial sums of |a_n| are flat (increase < epsilon) over the last
/// quarter of the list.
inline bool product_convergence_check(std::span<const ApproxReal> factors, double epsilon = kProductCheckEpsilon) {
  if (factors.empty()) throw DomainError("product_convergence_check needs a nonempty list");
  const std::size_t tail_start = factors.size() - factors.size() / 4;
  ApproxReal increase(factors.front().precision());
  for (std::size_t i = tail_start; i < factors.size(); ++i) increase += abs(factors[i]);
  return increase.to_double() < epsilon;
}

struct EulerProductOptions {
  // Bound the remaining product through the zeta tail instead of the
  // checkpoint difference.
  bool rigorous = false;
};

namespace detail {

// log of prod_{p > L} (1 - p^(-sigma))^(-1) is at most
// sum_{n > L} n^(-sigma) / (1 - n^(-sigma)) <= tail(sigma, L) / (1 - (L+1)^(-sigma)),
// and |prod_{p>L}(1 - p^(-s))^(-1) - 1| <= exp(that) - 1.
inline ApproxReal remaining_product_bound(const ApproxReal& sigma, std::uint64_t prime_limit) {
  const std::uint64_t from = prime_limit == 0 ? 1 : prime_limit;
  const ApproxReal tail = zeta_tail_bound(sigma, from).bound();
  const ApproxReal next = ApproxReal::from_integer(BigInt(static_cast<unsigned long>(from + 1)), sigma.precision());
  const ApproxReal log_bound = tail / (1 - pow(next, -sigma));
  return expm1(log_bound);
}

}  // namespace detail

/// prod_{p <= prime_limit} (1 - p^(-s))^(-1). Default error is the heuristic
/// |P(L) - P(floor(L/2))|; with options.rigorous it is |P(L)| (e^T - 1), T the
/// bound on the log of the remaining product.
inline BoundedValue zeta_euler_product(const ApproxReal& s, std::uint64_t prime_limit,
                                       long precision = kDefaultPrecision, EulerProductOptions options = {}) {
  check_precision(precision);
  detail::require_convergent(s);
  const long work = precision + kGuardBits;
  const ApproxReal neg_s = -s.rounded(work);
  const std::uint64_t checkpoint = prime_limit / 2;
  ApproxReal product(1, work);
  ApproxReal at_checkpoint(1, work);
  bool checkpoint_taken = false;
  ApproxReal p(work);
  for (const std::uint64_t prime : sieve_primes(prime_limit).primes) {
    if (prime > checkpoint && !checkpoint_taken) {
      at_checkpoint = product;
      checkpoint_taken = true;
    }
    mpfr_set_ui(p.get(), prime, MPFR_RNDN);
    product /= 1 - pow(p, neg_s);
  }
  if (!checkpoint_taken) at_checkpoint = product;

  ApproxReal value = product.rounded(precision);
  if (options.rigorous) {
    const ApproxReal bound = abs(product) * detail::remaining_product_bound(s.rounded(work), prime_limit);
    return {std::move(value), ErrorBound::rigorous(bound.rounded(precision))};
  }
  return {std::move(value), ErrorBound::heuristic(abs(product - at_checkpoint).rounded(precision))};
}

inline BoundedComplex zeta_euler_product(const ZetaArgument& s, std::uint64_t prime_limit,
                                         long precision = kDefaultPrecision, EulerProductOptions options = {}) {
  check_precision(precision);
  detail::require_convergent(s.re);
  const long work = precision + kGuardBits;
  const ApproxReal sigma = s.re.rounded(work);
  const ApproxReal t = s.im.rounded(work);
  const std::uint64_t checkpoint = prime_limit / 2;
  const ApproxComplex one(ApproxReal(1, work), ApproxReal(work));
  ApproxComplex product = one;
  ApproxComplex at_checkpoint = one;
  bool checkpoint_taken = false;
  ApproxReal p(work);
  for (const std::uint64_t prime : sieve_primes(prime_limit).primes) {
    if (prime > checkpoint && !checkpoint_taken) {
      at_checkpoint = product;
      checkpoint_taken = true;
    }
    mpfr_set_ui(p.get(), prime, MPFR_RNDN);
    const ApproxReal log_p = log(p);
    const ApproxReal magnitude = exp(-sigma * log_p);
    const ApproxReal phase = t * log_p;
    const ApproxComplex p_neg_s(magnitude * cos(phase), -(magnitude * sin(phase)));
    product = product / (one - p_neg_s);
  }
  if (!checkpoint_taken) at_checkpoint = product;

  ApproxComplex value = rounded(product, precision);
  if (options.rigorous) {
    const ApproxReal bound = abs(product) * detail::remaining_product_bound(sigma, prime_limit);
    return {std::move(value), ErrorBound::rigorous(bound.rounded(precision))};
  }
  return {std::move(value), ErrorBound::heuristic(abs(product - at_checkpoint).rounded(precision))};
}

/// The terms a_p = p^(-Re s) whose summability makes the Euler product
/// converge; feed to product_convergence_check.
inline std::vector<ApproxReal> euler_product_terms(const ApproxReal& s_real, std::uint64_t prime_limit) {
  detail::require_convergent(s_real);
  std::vector<ApproxReal> terms;
  ApproxReal p(s_real.precision());
  for (const std::uint64_t prime : sieve_primes(prime_limit).primes) {
    mpfr_set_ui(p.get(), prime, MPFR_RNDN);
    terms.push_back(pow(p, -s_real));
  }
  return terms;
}

}  // namespace zetalab
