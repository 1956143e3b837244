#include "fivesel/localdensity.hpp"

#include <stdexcept>

#include "fivesel/primes.hpp"

namespace fivesel {

namespace {

Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

Rat local_density(long p, LocalEvent ev) {
  if (p <= 3 || !is_prime(p))
    throw std::invalid_argument("local_density: prime must exceed 3");
  const Int P(p);
  switch (ev) {
    case LocalEvent::Good:
      return make_rat(P - 1, P);
    case LocalEvent::Mult1:
      return make_rat((P - 1) * (P - 1), P * P * P);
    case LocalEvent::Mult2:
      return make_rat((P - 1) * (P - 1), P * P * P * P);
    case LocalEvent::Mult3:
      return make_rat((P - 1) * (P - 1), P * P * P * P * P);
    case LocalEvent::Add2:
      return make_rat(P - 1, P * P * P);
    case LocalEvent::Add3:
      return make_rat(P - 1, P * P * P * P);
    case LocalEvent::Add4:
      return make_rat(P - 1, P * P * P * P * P);
  }
  throw std::invalid_argument("local_density: unsupported event");
}

Rat cond1_density(long p) {
  if (p <= 3 || !is_prime(p))
    throw std::invalid_argument("cond1_density: prime must exceed 3");
  const Int P(p);
  const Int p4 = P * P * P * P;
  return make_rat(p4 - P * P + P - 1, p4);
}

Rat cond2_density(long p) {
  if (p <= 3 || !is_prime(p))
    throw std::invalid_argument("cond2_density: prime must exceed 3");
  const Int P(p);
  return make_rat(P - 1, P * P * P);
}

std::map<std::pair<ReductionType, long>, long long> enumerate_reduction(long p,
                                                                        int k) {
  if (p <= 3 || !is_prime(p))
    throw std::invalid_argument("enumerate_reduction: prime must exceed 3");
  if (k < 1 || k > 6)
    throw std::invalid_argument("enumerate_reduction: exponent out of range");
  long long m = 1;
  for (int i = 0; i < k; ++i) m *= p;

  std::map<std::pair<ReductionType, long>, long long> counts;
  for (long long a = 0; a < m; ++a) {
    const long long a3 = a * a * a;
    for (long long b = 0; b < m; ++b) {
      // 4A^3 + 27B^2 is well defined mod p^k, so valuations below k are
      // determined by the class; larger ones are capped at k.
      long long d = (4 * a3 + 27 * b * b) % m;
      long v = 0;
      while (v < k && d % p == 0) {
        d /= p;
        ++v;
      }
      ReductionType type;
      if (v == 0)
        type = ReductionType::Good;
      else if (a % p == 0 && b % p == 0)
        type = ReductionType::Additive;
      else
        type = ReductionType::Multiplicative;
      ++counts[{type, v}];
    }
  }
  return counts;
}

}  // namespace fivesel
