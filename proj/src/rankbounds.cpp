#include "fivesel/rankbounds.hpp"

#include <stdexcept>

namespace fivesel {

LinearProgram build_rank_lp(const RankProgram& p) {
  if (p.rmax < 2)
    throw std::invalid_argument("build_rank_lp: rmax must be at least 2");
  if (p.avg <= 0)
    throw std::invalid_argument("build_rank_lp: avg must be positive");
  if (p.objective == RankObjective::MassRank0 && !p.parity)
    throw std::invalid_argument(
        "build_rank_lp: the rank-0 bound needs the parity constraint");

  const size_t n = static_cast<size_t>(p.rmax) + 1;
  LinearProgram lp;
  lp.c.assign(n, Rat(0));
  switch (p.objective) {
    case RankObjective::AverageRank:
      lp.sense = Sense::Maximize;
      for (size_t r = 0; r < n; ++r) lp.c[r] = Rat(static_cast<long>(r));
      break;
    case RankObjective::MassRank01:
      lp.sense = Sense::Minimize;
      lp.c[0] = 1;
      lp.c[1] = 1;
      break;
    case RankObjective::MassRank0:
      lp.sense = Sense::Minimize;
      lp.c[0] = 1;
      break;
  }

  Constraint mass;
  mass.a.assign(n, Rat(1));
  mass.rel = Relation::Equal;
  mass.b = 1;
  Constraint budget;
  budget.a.resize(n);
  budget.rel = Relation::LessEq;
  budget.b = p.avg;
  for (size_t r = 0; r < n; ++r) budget.a[r] = Rat(pow_int(5, r));
  lp.rows.push_back(std::move(mass));
  lp.rows.push_back(std::move(budget));
  if (p.parity) {
    Constraint even;
    even.a.assign(n, Rat(0));
    even.rel = Relation::Equal;
    even.b = Rat(1, 2);
    for (size_t r = 0; r < n; r += 2) even.a[r] = 1;
    lp.rows.push_back(std::move(even));
  }
  return lp;
}

LPSolution solve_rank(const RankProgram& p) { return solve_lp(build_rank_lp(p)); }

Rat rank0_chain_bound(const Rat& avg) {
  Rat v = (Rat(15) - avg) / 24;
  if (v < 0) v = 0;
  return v;
}

namespace {

struct Gadget {
  long a, b;       // L(n) = a n + b
  long start, step;  // admissible n
  long anchor;       // induction base
};

Gadget gadget_for(GadgetKind k) {
  switch (k) {
    case GadgetKind::AllRanks:
      return {20, -15, 0, 1, 2};
    case GadgetKind::EvenCounts:
      return {12, 1, 0, 2, 2};
    case GadgetKind::OddCounts:
      return {60, -55, 1, 2, 3};
  }
  throw std::logic_error("verify_inequality: unknown gadget");
}

Int lin(const Gadget& g, long n) { return Int(g.a) * n + g.b; }

}  // namespace

GadgetReport verify_inequality(GadgetKind kind, long up_to) {
  if (up_to < 5)
    throw std::invalid_argument("verify_inequality: up_to must be at least 5");
  const Gadget g = gadget_for(kind);
  GadgetReport rep;
  rep.kind = kind;
  rep.checked_up_to = up_to;
  rep.direct_ok = true;
  for (long n = g.start; n <= up_to; n += g.step) {
    const Int lhs = lin(g, n);
    const Int rhs = pow_int(5, static_cast<unsigned long>(n));
    if (lhs > rhs) {
      rep.direct_ok = false;
      rep.failures.push_back("counterexample at n=" + std::to_string(n) +
                             ": " + lhs.get_str() + " > " + rhs.get_str());
    } else if (lhs == rhs) {
      rep.equalities.push_back(n);
    }
  }

  rep.anchor = g.anchor;
  const bool base_gap =
      pow_int(5, static_cast<unsigned long>(g.anchor)) >= lin(g, g.anchor);
  const bool base_nonneg = lin(g, g.anchor) >= 0;
  const bool step_margin = 4 * lin(g, g.anchor) - lin(g, g.anchor + 1) >= 0;
  const bool slope_pos = g.a > 0;
  rep.dominance_ok = base_gap && base_nonneg && step_margin && slope_pos;
  if (!rep.dominance_ok)
    rep.failures.push_back("dominance certificate failed at anchor " +
                           std::to_string(g.anchor));
  return rep;
}

Rat combine(const Rat& family_density, const Rat& in_family,
            const Rat& out_family, CombineMode mode) {
  if (family_density < 0 || family_density > 1)
    throw std::invalid_argument("combine: family density must lie in [0, 1]");
  if (mode != CombineMode::AvgRank && (in_family < 0 || out_family < 0))
    throw std::invalid_argument("combine: mass bounds must be nonnegative");
  return family_density * in_family + (1 - family_density) * out_family;
}

}  // namespace fivesel
