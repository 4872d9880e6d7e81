#ifndef RSL_PRIMES_HPP
#define RSL_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace rsl {

/// Rational primes <= x (cached sieve; returns a prefix copy so the result
/// stays valid across later extensions).
std::vector<std::int64_t> primes_up_to(std::int64_t x);

bool is_prime(std::int64_t n);

} // namespace rsl

#endif
