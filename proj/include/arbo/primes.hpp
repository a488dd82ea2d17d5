#ifndef ARBO_PRIMES_HPP
#define ARBO_PRIMES_HPP

#include <cstdint>

namespace arbo {

constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

// Smallest prime strictly greater than n.
constexpr std::uint64_t next_prime_above(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

}  // namespace arbo

#endif  // ARBO_PRIMES_HPP
