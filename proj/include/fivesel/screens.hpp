// Reducibility screens: 13 coordinate vanishing patterns, each certifying
// that a quintuple is not strongly irreducible, plus the Q1 factorization
// witnesses for the first three patterns.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "fivesel/quadric.hpp"
#include "fivesel/quintuple.hpp"

namespace fivesel {

// The 13 vanishing sets, as 0..49 symbol indices. Index k holds case k+1.
const std::array<std::vector<int>, 13>& reducibility_sets();

// Smallest case number in 1..13 whose set vanishes identically on v, if any.
std::optional<int> reducibility_screen(const Quintuple& v);

struct Q1Witness {
  int case_id;      // 1, 2, or 3
  LinearForm f1, f2;  // case 1: -Q1 == f1 * f2 exactly (zero forms otherwise)
  QuadricForm q1;   // Q1 itself; for cases 2/3 its Gram is confined to row/col 5
};

// Requires v to vanish on the Case-1, Case-2, or Case-3 set (checked in that
// order); throws std::invalid_argument otherwise. The returned witness is
// verified before it is returned: case 1 asserts the exact polynomial
// identity -Q1 = f1*f2, cases 2/3 assert the Gram confinement.
Q1Witness q1_factorization(const Quintuple& v);

}  // namespace fivesel
