#include "fivesel/simplex.hpp"

#include <cstddef>
#include <stdexcept>

namespace fivesel {

namespace {

// Dense tableau over the extended columns [structural | slack/surplus |
// artificial | tracking]. The tracking block starts as the identity and is
// carried through every pivot, so it always holds the inverse of the current
// basis matrix; the dual vector is read from it at the end.
struct Tableau {
  std::vector<std::vector<Rat>> T;
  std::vector<Rat> rhs;
  std::vector<size_t> basis;  // column basic in each row
  size_t art_begin = 0, art_end = 0;
  size_t track_begin = 0;
};

void pivot(Tableau& t, size_t row, size_t col) {
  auto& R = t.T[row];
  const Rat inv = Rat(1) / R[col];
  for (auto& v : R) v *= inv;
  t.rhs[row] *= inv;
  for (size_t i = 0; i < t.T.size(); ++i) {
    if (i == row) continue;
    const Rat f = t.T[i][col];
    if (f == 0) continue;
    auto& Ri = t.T[i];
    for (size_t j = 0; j < Ri.size(); ++j)
      if (R[j] != 0) Ri[j] -= f * R[j];
    t.rhs[i] -= f * t.rhs[row];
  }
  t.basis[row] = col;
}

enum class RunResult { Done, Unbounded };

// cost is indexed by column and covers [0, track_begin).
RunResult run_simplex(Tableau& t, const std::vector<Rat>& cost,
                      bool allow_artificial) {
  const size_t m = t.T.size();
  for (;;) {
    size_t enter = SIZE_MAX;
    for (size_t j = 0; j < t.track_begin && enter == SIZE_MAX; ++j) {
      if (!allow_artificial && j >= t.art_begin && j < t.art_end) continue;
      bool basic = false;
      for (size_t i = 0; i < m && !basic; ++i) basic = t.basis[i] == j;
      if (basic) continue;
      Rat rc = cost[j];
      for (size_t i = 0; i < m; ++i)
        if (cost[t.basis[i]] != 0 && t.T[i][j] != 0)
          rc -= cost[t.basis[i]] * t.T[i][j];
      if (rc > 0) enter = j;  // Bland: lowest improving column index
    }
    if (enter == SIZE_MAX) return RunResult::Done;

    size_t leave = SIZE_MAX;
    Rat best;
    for (size_t i = 0; i < m; ++i) {
      if (t.T[i][enter] <= 0) continue;
      const Rat ratio = t.rhs[i] / t.T[i][enter];
      if (leave == SIZE_MAX || ratio < best ||
          (ratio == best && t.basis[i] < t.basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == SIZE_MAX) return RunResult::Unbounded;
    pivot(t, leave, enter);
  }
}

}  // namespace

LPSolution solve_lp(const LinearProgram& lp) {
  const size_t n = lp.c.size();
  const size_t m = lp.rows.size();
  for (const auto& r : lp.rows)
    if (r.a.size() != n)
      throw std::invalid_argument("solve_lp: constraint arity mismatch");
  const bool minimize = lp.sense == Sense::Minimize;

  // Normalized rows with nonnegative right-hand sides.
  std::vector<std::vector<Rat>> A(m, std::vector<Rat>(n));
  std::vector<Rat> b(m);
  std::vector<Relation> rel(m);
  std::vector<bool> flipped(m, false);
  for (size_t i = 0; i < m; ++i) {
    A[i] = lp.rows[i].a;
    b[i] = lp.rows[i].b;
    rel[i] = lp.rows[i].rel;
    if (b[i] < 0) {
      flipped[i] = true;
      b[i] = -b[i];
      for (auto& v : A[i]) v = -v;
      if (rel[i] == Relation::LessEq)
        rel[i] = Relation::GreaterEq;
      else if (rel[i] == Relation::GreaterEq)
        rel[i] = Relation::LessEq;
    }
  }

  // Column layout.
  std::vector<size_t> slack_col(m, SIZE_MAX), art_col(m, SIZE_MAX);
  size_t next = n;
  for (size_t i = 0; i < m; ++i)
    if (rel[i] != Relation::Equal) slack_col[i] = next++;
  const size_t art_begin = next;
  for (size_t i = 0; i < m; ++i)
    if (rel[i] != Relation::LessEq) art_col[i] = next++;
  const size_t art_end = next;
  const size_t track_begin = next;
  const size_t total = track_begin + m;

  Tableau t;
  t.art_begin = art_begin;
  t.art_end = art_end;
  t.track_begin = track_begin;
  t.rhs = b;
  t.basis.assign(m, SIZE_MAX);
  t.T.assign(m, std::vector<Rat>(total, Rat(0)));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) t.T[i][j] = A[i][j];
    if (slack_col[i] != SIZE_MAX)
      t.T[i][slack_col[i]] = rel[i] == Relation::LessEq ? 1 : -1;
    if (art_col[i] != SIZE_MAX) t.T[i][art_col[i]] = 1;
    t.T[i][track_begin + i] = 1;
    t.basis[i] = rel[i] == Relation::LessEq ? slack_col[i] : art_col[i];
  }

  LPSolution out;
  if (art_begin != art_end) {
    std::vector<Rat> cost1(track_begin, Rat(0));
    for (size_t j = art_begin; j < art_end; ++j) cost1[j] = -1;
    run_simplex(t, cost1, /*allow_artificial=*/true);  // bounded above by 0
    Rat infeas(0);
    for (size_t i = 0; i < m; ++i)
      if (t.basis[i] >= art_begin && t.basis[i] < art_end) infeas += t.rhs[i];
    if (infeas != 0) {
      out.status = LPStatus::Infeasible;
      return out;
    }
    // Drive any zero-valued artificial out of the basis.
    for (size_t i = 0; i < m; ++i) {
      if (t.basis[i] < art_begin || t.basis[i] >= art_end) continue;
      size_t piv = SIZE_MAX;
      for (size_t j = 0; j < art_begin && piv == SIZE_MAX; ++j)
        if (t.T[i][j] != 0) piv = j;
      if (piv == SIZE_MAX)
        throw std::runtime_error("solve_lp: redundant constraint row");
      pivot(t, i, piv);
    }
  }

  std::vector<Rat> cost2(track_begin, Rat(0));
  for (size_t j = 0; j < n; ++j) cost2[j] = minimize ? Rat(-lp.c[j]) : lp.c[j];
  if (run_simplex(t, cost2, /*allow_artificial=*/false) ==
      RunResult::Unbounded) {
    out.status = LPStatus::Unbounded;
    return out;
  }

  out.status = LPStatus::Optimal;
  out.x.assign(n, Rat(0));
  for (size_t i = 0; i < m; ++i)
    if (t.basis[i] < n) out.x[t.basis[i]] = t.rhs[i];
  Rat opt(0);
  for (size_t j = 0; j < n; ++j)
    if (cost2[j] != 0 && out.x[j] != 0) opt += cost2[j] * out.x[j];
  out.optimum = minimize ? Rat(-opt) : opt;

  out.y.assign(m, Rat(0));
  for (size_t i = 0; i < m; ++i) {
    Rat yi(0);
    for (size_t k = 0; k < m; ++k)
      if (cost2[t.basis[k]] != 0 && t.T[k][track_begin + i] != 0)
        yi += cost2[t.basis[k]] * t.T[k][track_begin + i];
    if (flipped[i]) yi = -yi;
    if (minimize) yi = -yi;
    out.y[i] = yi;
  }

  out.certified = check_feasible(lp, out.x) && check_certificate(lp, out);
  if (!out.certified)
    throw std::logic_error("solve_lp: certificate verification failed");
  return out;
}

bool check_feasible(const LinearProgram& lp, const std::vector<Rat>& x) {
  if (x.size() != lp.c.size()) return false;
  for (const auto& v : x)
    if (v < 0) return false;
  for (const auto& r : lp.rows) {
    Rat lhs(0);
    for (size_t j = 0; j < x.size(); ++j)
      if (r.a[j] != 0 && x[j] != 0) lhs += r.a[j] * x[j];
    switch (r.rel) {
      case Relation::LessEq:
        if (!(lhs <= r.b)) return false;
        break;
      case Relation::Equal:
        if (lhs != r.b) return false;
        break;
      case Relation::GreaterEq:
        if (!(lhs >= r.b)) return false;
        break;
    }
  }
  return true;
}

bool check_certificate(const LinearProgram& lp, const LPSolution& sol) {
  const size_t n = lp.c.size(), m = lp.rows.size();
  if (sol.status != LPStatus::Optimal) return false;
  if (sol.x.size() != n || sol.y.size() != m) return false;
  const bool mx = lp.sense == Sense::Maximize;

  // Sign conditions making y.b a one-sided bound over the feasible set.
  for (size_t i = 0; i < m; ++i) {
    if (lp.rows[i].rel == Relation::LessEq && (mx ? sol.y[i] < 0 : sol.y[i] > 0))
      return false;
    if (lp.rows[i].rel == Relation::GreaterEq &&
        (mx ? sol.y[i] > 0 : sol.y[i] < 0))
      return false;
  }
  // Dual feasibility against every nonnegative variable.
  for (size_t j = 0; j < n; ++j) {
    Rat s(0);
    for (size_t i = 0; i < m; ++i)
      if (sol.y[i] != 0 && lp.rows[i].a[j] != 0) s += sol.y[i] * lp.rows[i].a[j];
    if (mx ? s < lp.c[j] : s > lp.c[j]) return false;
  }
  // Exact tightness: primal objective = dual value = claimed optimum.
  Rat yb(0);
  for (size_t i = 0; i < m; ++i)
    if (sol.y[i] != 0 && lp.rows[i].b != 0) yb += sol.y[i] * lp.rows[i].b;
  return yb == sol.optimum && objective_value(lp, sol.x) == sol.optimum;
}

Rat objective_value(const LinearProgram& lp, const std::vector<Rat>& x) {
  if (x.size() != lp.c.size())
    throw std::invalid_argument("objective_value: arity mismatch");
  Rat v(0);
  for (size_t j = 0; j < x.size(); ++j)
    if (lp.c[j] != 0 && x[j] != 0) v += lp.c[j] * x[j];
  return v;
}

}  // namespace fivesel
