// Rank-distribution optimization: the linear programs bounding average rank
// and low-rank mass under a mean-multiplicative-size constraint, the linear
// inequality gadgets those arguments rest on, and the final family-weighted
// combinations.
#pragma once

#include <string>
#include <vector>

#include "fivesel/rational.hpp"
#include "fivesel/simplex.hpp"

namespace fivesel {

enum class RankObjective { AverageRank, MassRank01, MassRank0 };

// Distribution x_0..x_rmax over ranks with total mass 1, E[5^rank] <= avg,
// and optionally exactly half the mass on even ranks.
struct RankProgram {
  RankObjective objective = RankObjective::AverageRank;
  Rat avg{6};
  long rmax = 40;
  bool parity = false;
};

// Rows in order: [0] total mass = 1, [1] E[5^rank] <= avg,
// [2] (parity only) even-rank mass = 1/2. AverageRank maximizes; the mass
// objectives minimize. MassRank0 requires parity (vacuous without it).
LinearProgram build_rank_lp(const RankProgram& p);

LPSolution solve_rank(const RankProgram& p);

// Closed-form chain for the parity rank-0 bound: the even-rank mass costs
// at least x0 + 25(1/2 - x0) and the odd-rank mass at least 5/2, so
// x0 >= (15 - avg)/24, clamped at zero.
Rat rank0_chain_bound(const Rat& avg);

// Linear gadgets L(n) <= 5^n: 20n-15 over all ranks, 12n+1 over even
// counts, 60n-55 over odd counts.
enum class GadgetKind { AllRanks, EvenCounts, OddCounts };

struct GadgetReport {
  GadgetKind kind = GadgetKind::AllRanks;
  long checked_up_to = 0;
  bool direct_ok = false;        // L(n) <= 5^n on the admissible range
  std::vector<long> equalities;  // points with L(n) == 5^n
  long anchor = 0;               // induction base
  bool dominance_ok = false;     // base and step conditions hold
  std::vector<std::string> failures;
  bool ok() const { return direct_ok && dominance_ok; }
};

// Check the gadget directly for admissible n <= up_to (up_to >= 5), then
// certify it for every larger n: with gap(n) = 5^n - L(n),
//   gap(n+1) >= 5 gap(n) + (4 L(n) - L(n+1))    whenever L(n) >= 0,
// and the step margin 4L(n) - L(n+1) grows with n, so nonnegative gap and
// margin at the anchor propagate to all integers beyond it.
GadgetReport verify_inequality(GadgetKind kind, long up_to);

// Convex combination of an in-family bound and an out-of-family bound
// weighted by the family density. The mode names which kind of bound is
// being combined (average-rank upper bound, or low-rank mass lower bounds,
// whose inputs must be nonnegative).
enum class CombineMode { AvgRank, Rank01, Rank0 };
Rat combine(const Rat& family_density, const Rat& in_family,
            const Rat& out_family, CombineMode mode);

}  // namespace fivesel
