#include "fivesel/primes.hpp"

namespace fivesel {

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  if (n < 2) return out;
  std::vector<bool> composite(static_cast<size_t>(n) + 1, false);
  for (long p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (long q = p * p; q >= 0 && q <= n; q += p) composite[q] = true;
  }
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace fivesel
