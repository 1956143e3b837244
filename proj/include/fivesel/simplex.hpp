// Exact-rational linear programming over nonnegative variables.
#pragma once

#include <vector>

#include "fivesel/rational.hpp"

namespace fivesel {

enum class Relation { LessEq, Equal, GreaterEq };
enum class Sense { Maximize, Minimize };
enum class LPStatus { Optimal, Infeasible, Unbounded };

struct Constraint {
  std::vector<Rat> a;
  Relation rel = Relation::LessEq;
  Rat b;
};

// Optimize c.x subject to the rows and x >= 0.
struct LinearProgram {
  Sense sense = Sense::Maximize;
  std::vector<Rat> c;
  std::vector<Constraint> rows;
};

struct LPSolution {
  LPStatus status = LPStatus::Infeasible;
  Rat optimum;
  std::vector<Rat> x;  // primal witness (empty unless optimal)
  std::vector<Rat> y;  // dual multipliers, one per row (empty unless optimal)
  bool certified = false;
};

// Two-phase simplex with Bland's anti-cycling rule, all arithmetic exact.
// Optimal solutions carry a dual certificate that is re-verified by
// substitution before returning; a failed verification throws logic_error.
// Throws runtime_error on a redundant constraint row (basis-degenerate
// artificial that cannot be driven out).
LPSolution solve_lp(const LinearProgram& lp);

// Exact feasibility of a point: x >= 0 and every row relation holds.
bool check_feasible(const LinearProgram& lp, const std::vector<Rat>& x);

// Weak-duality certificate: dual sign conditions per relation, dual
// feasibility over every variable, and exact agreement of primal objective,
// dual value, and the claimed optimum.
bool check_certificate(const LinearProgram& lp, const LPSolution& sol);

Rat objective_value(const LinearProgram& lp, const std::vector<Rat>& x);

}  // namespace fivesel
