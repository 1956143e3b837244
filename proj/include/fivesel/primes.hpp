#pragma once

#include <vector>

namespace fivesel {

// All primes <= n in increasing order (sieve of Eratosthenes).
std::vector<long> primes_up_to(long n);

// Deterministic trial-division primality test for n >= 0.
bool is_prime(long n);

}  // namespace fivesel
