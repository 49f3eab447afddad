#pragma once

#include <cstddef>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "zetalab/numcore/errors.hpp"
#include "zetalab/numcore/rational.hpp"

namespace zetalab {

/// B_0 .. B_{n_max} with the convention B_1 = -1/2.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::vector<BigRational> values) : values_(std::move(values)) {
    if (values_.empty()) throw DomainError("Bernoulli table needs at least B_0");
  }

  std::size_t n_max() const { return values_.size() - 1; }
  std::size_t size() const { return values_.size(); }
  const BigRational& operator[](std::size_t n) const { return values_.at(n); }
  std::span<const BigRational> values() const { return values_; }

 private:
  std::vector<BigRational> values_;
};

/// sum_{j=0}^{k-1} C(k, j) B_j, which vanishes for every k >= 2. Needs
/// k - 1 <= table.n_max().
inline BigRational recursion_residual(const BernoulliTable& table, unsigned long k) {
  if (k == 0 || k - 1 > table.n_max()) throw DomainError("recursion residual index out of table range");
  BigRational sum;
  for (unsigned long j = 0; j < k; ++j) sum += BigRational(binomial(k, j)) * table[j];
  return sum;
}

namespace detail {

// Grows monotonically; each entry is final once written, so readers only
// ever see values identical to a fresh recomputation.
class BernoulliCache {
 public:
  BernoulliCache() { values_.emplace_back(1); }

  std::vector<BigRational> prefix(std::size_t n_max) {
    std::lock_guard lock(mutex_);
    extend_to(n_max);
    return {values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(n_max + 1)};
  }

  BigRational at(std::size_t n) {
    std::lock_guard lock(mutex_);
    extend_to(n);
    return values_[n];
  }

 private:
  // 0 = sum_{j=0}^{k-1} C(k,j) B_j with k = m + 1 solved for B_m, whose
  // coefficient is C(m+1, m) = m + 1.
  void extend_to(std::size_t n) {
    values_.reserve(n + 1);
    for (std::size_t m = values_.size(); m <= n; ++m) {
      const unsigned long k = m + 1;
      BigRational sum;
      BigInt c = 1;  // C(k, j), advanced multiplicatively
      for (unsigned long j = 0; j < m; ++j) {
        if (!values_[j].is_zero()) sum += BigRational(c) * values_[j];
        c *= k - j;
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), j + 1);
      }
      values_.push_back(-sum / BigRational(static_cast<long>(k)));
    }
  }

  std::mutex mutex_;
  std::vector<BigRational> values_;
};

inline BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace detail

/// Exact B_n. All B_m with m <= n are computed along the way and kept.
inline BigRational bernoulli(unsigned n) { return detail::bernoulli_cache().at(n); }

inline BernoulliTable bernoulli_table(unsigned n_max) {
  return BernoulliTable(detail::bernoulli_cache().prefix(n_max));
}

}  // namespace zetalab
