#pragma once

#include <map>
#include <utility>

#include "fivesel/curves.hpp"
#include "fivesel/rational.hpp"

namespace fivesel {

// Reduction events at a prime p > 3 whose densities have closed forms:
// good reduction, multiplicative reduction with v_p(disc) in {1,2,3}, and
// additive reduction with v_p(disc) in {2,3,4}.
enum class LocalEvent { Good, Mult1, Mult2, Mult3, Add2, Add3, Add4 };

// Density of coefficient pairs (A, B) showing the given behaviour at p > 3:
//   Good      1 - 1/p
//   Mult(v=k) (p-1)^2 / p^{2+k}   (total multiplicative mass 1/p - 1/p^2)
//   Add(v=k)  (p-1) / p^{k+1}     (total additive mass 1/p^2)
Rat local_density(long p, LocalEvent ev);

// Mass at p of the sign-preserving event used for the prime-to-6 families:
// good, or multiplicative with v in {1,3}, or additive with v in {2,4}.
// Equals 1 - 1/p^2 + 1/p^3 - 1/p^4.
Rat cond1_density(long p);

// Mass of the sign-flipping event: multiplicative v = 2 or additive v = 3.
// Equals (p-1)/p^3.
Rat cond2_density(long p);

// Tally of residue classes (A, B) mod p^k keyed by (reduction type,
// min(v_p(disc factor), k)). Classes whose discriminant factor vanishes to
// order >= k (where the valuation is no longer determined by the residue)
// are binned at v = k. Good reduction appears as (Good, 0).
std::map<std::pair<ReductionType, long>, long long> enumerate_reduction(long p,
                                                                        int k);

}  // namespace fivesel
