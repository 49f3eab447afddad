#pragma once

#include <cstdint>
#include <vector>

namespace zetalab {

/// All primes <= limit, strictly ascending.
struct PrimeList {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;
};

/// Mark-multiples sieve of Eratosthenes, O(limit) memory.
inline PrimeList sieve_primes(std::uint64_t limit) {
  PrimeList out{limit, {}};
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p * p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
  }
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (!composite[n]) out.primes.push_back(n);
  }
  return out;
}

}  // namespace zetalab
