#pragma once

#include <utility>

#include "fivesel/rational.hpp"
#include "fivesel/tables.hpp"

namespace fivesel {

// Condition-2 primes are drawn from [7, kCond2PrimeBound] by definition of
// the two prime-to-6 families; only the infinite product's truncation point
// is adjustable.
inline constexpr long kCond2PrimeBound = 10000;

// Component lower bounds together with the assembled sign families.
struct FamilyBounds {
  Rat F1, F2, F3, F4;
  Rat Fplus;   // F1*F4 + F2*F3
  Rat Fminus;  // F1*F3 + F2*F4
  Rat Ftotal;  // (1/5) Fplus + (4/5) Fminus
};

// Assemble the sign families from component bounds. The 1/5 : 4/5 weights
// are the height-ordered proportions of positive- and negative-discriminant
// curves (leading constants 8/5 versus 32/5).
FamilyBounds assemble_families(const Rat& f1, const Rat& f2, const Rat& f3,
                               const Rat& f4);

// Exact F1/F2 lower bounds from the two tables' row data: group each
// table's per-class masses by whether (disc class mod 4) * sign is 1 or 3
// mod 4 and take the matching/opposite pairings across p = 2 and p = 3.
std::pair<Rat, Rat> density_F1_F2(const DensityTable& t2,
                                  const DensityTable& t3);

// The same pairing computed from the printed four-decimal column totals
// instead of the exact row data.
std::pair<Rat, Rat> density_F1_F2_printed(const DensityTable& t2,
                                          const DensityTable& t3);

// Euler-product bounds for the two prime-to-6 families over p = 3 (mod 4).
struct EulerBounds {
  long prime_bound = 0;     // truncation point for the infinite product
  long cond2_primes = 0;    // number of admissible condition-2 primes
  Rat S1;                   // sum of cond2/cond1 ratios over those primes
  Rat S2;                   // sum of the squared ratios
  Rat tail_floor;           // provable lower bound for the omitted factors
  Rat F3_core, F4_core;     // truncated product only, no tail correction
  Rat F3_lower, F4_lower;   // rigorous: core times tail_floor
};

// F3 = (all primes keep condition 1) + (exactly two condition-2 primes),
// F4 = (exactly one condition-2 prime); see cond1_density/cond2_density.
// The truncated product is accumulated with 192-bit floor rounding, so
// every reported bound is a true lower bound. Requires prime_bound >= 10^4.
EulerBounds density_F3_F4(long prime_bound);

// Rigorous upper bound for the F3 density: the truncated product with
// ceiling rounding (omitted factors are below 1, so truncation only
// overestimates).
Rat density_F3_upper(long prime_bound);

}  // namespace fivesel
