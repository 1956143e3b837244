#include "fivesel/suites.hpp"

#include <cstdio>
#include <functional>
#include <future>
#include <random>
#include <semaphore>
#include <sstream>

#include "fivesel/cusp.hpp"
#include "fivesel/curves.hpp"
#include "fivesel/families.hpp"
#include "fivesel/group.hpp"
#include "fivesel/io.hpp"
#include "fivesel/latticecount.hpp"
#include "fivesel/localdensity.hpp"
#include "fivesel/quadric.hpp"
#include "fivesel/quintuple.hpp"
#include "fivesel/rankbounds.hpp"
#include "fivesel/screens.hpp"
#include "fivesel/simplex.hpp"
#include "fivesel/skew.hpp"
#include "fivesel/tables.hpp"
#include "fivesel/weights.hpp"

namespace fivesel {

namespace {

std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  const size_t shown = parts.size() > 3 ? 3 : parts.size();
  for (size_t i = 0; i < shown; ++i) {
    if (i) out += "; ";
    out += parts[i];
  }
  if (parts.size() > shown)
    out += "; … (" + std::to_string(parts.size() - shown) + " more)";
  return out;
}

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

// --- deterministic random generators for the algebra suites --------------

int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return static_cast<int>(lo + rng() % (hi - lo + 1));
}

Rat rand_rat(std::mt19937_64& rng, int lo = -9, int hi = 9, int max_den = 9) {
  Rat q(rand_int(rng, lo, hi), rand_int(rng, 1, max_den));
  q.canonicalize();
  return q;
}

SkewMatrix rand_skew(std::mt19937_64& rng, int dim) {
  SkewMatrix m = SkewMatrix::zero(dim);
  for (auto& x : m.upper) x = rand_rat(rng);
  return m;
}

Mat rand_square(std::mt19937_64& rng, int dim) {
  Mat g = zero_mat(dim, dim);
  for (auto& row : g)
    for (auto& x : row) x = rand_rat(rng, -4, 4, 3);
  return g;
}

Quintuple pattern_quintuple(std::mt19937_64& rng, int case_id) {
  const auto& dead = reducibility_sets()[case_id - 1];
  Quintuple v;
  for (int s = 0; s < kNumSymbols; ++s) {
    bool zero = false;
    for (int d : dead) zero = zero || d == s;
    v.set_coord(s, zero ? Rat(0) : Rat(rand_int(rng, 1, 9)));
  }
  return v;
}

}  // namespace

Report suite_cusp_verify(const std::string& data_dir) {
  Report r;
  r.suite = "cusp-verify";
  const auto certs =
      parse_certificates(read_file(data_dir + "/cusp_certificates.txt"));
  r.add(certs.size() == 10, "case-count", "10 certificates",
        std::to_string(certs.size()), "shipped certificate file");

  const char* kGaps[10] = {"1/10", "1/10", "1/4", "1/10", "1/5",
                           "1/5",  "1/10", "1/5", "1/5",  "1/10"};
  bool gaps_ok = certs.size() == 10;
  std::string gaps_actual;
  for (size_t i = 0; i < certs.size(); ++i) {
    const auto& c = certs[i];
    const std::string id = "case-" + std::to_string(c.case_id);
    const auto pi_rep = verify_pi(c);
    r.add(pi_rep.ok, id,
          "gap >= 1/10 and strictly negative weighted budgets",
          pi_rep.ok ? "gap " + c.claimed_gap.get_str() +
                          "; all weight checks hold"
                    : joined(pi_rep.failures),
          "shipped certificate file");
    const auto piu_rep = verify_pi_u(c);
    r.add(piu_rep.ok, id + "-helpers",
          "one dominating helper monomial per element of Z beyond a12",
          piu_rep.ok ? "all helper checks hold" : joined(piu_rep.failures),
          "shipped certificate file");
    if (i < 10 && c.claimed_gap != parse_rat_or_throw(kGaps[i]))
      gaps_ok = false;
    if (!gaps_actual.empty()) gaps_actual += " ";
    gaps_actual += c.claimed_gap.get_str();
  }
  r.add(gaps_ok, "gap-values", "1/10 1/10 1/4 1/10 1/5 1/5 1/10 1/5 1/5 1/10",
        gaps_actual, "frozen gap list");
  return r;
}

Report suite_cusp_partition() {
  Report r;
  r.suite = "cusp-partition";

  const auto sets = generate_partition();
  r.add(sets.size() == 1002, "partition-size", "1002 vanishing sets",
        std::to_string(sets.size()), "frozen generation count");

  const auto cover = check_cover(sets);
  r.add(cover.ok, "cover",
        "every generated set inside one of the 10 maximal sets",
        cover.ok ? "all covered"
                 : std::to_string(cover.uncovered.size()) + " sets uncovered",
        "cover sets");

  int mismatches = 0;
  for (int u = 0; u < kNumSymbols; ++u)
    for (int v = 0; v < kNumSymbols; ++v) {
      const WeightVector wu = weight(u), wv = weight(v);
      bool wle = true;
      for (int i = 0; i < 8; ++i) wle = wle && wu[i] <= wv[i];
      if (leq(u, v) != wle) ++mismatches;
    }
  r.add(mismatches == 0, "order-weight",
        "combinatorial order equals componentwise weight order on 2500 pairs",
        mismatches == 0 ? "all pairs agree"
                        : std::to_string(mismatches) + " mismatches",
        "torus weight calculus");

  const int a12 = *symbol_from_name("a12");
  bool min_ok = true;
  for (int v = 0; v < kNumSymbols; ++v) {
    if (!leq(a12, v)) min_ok = false;
    if (v != a12 && leq(v, a12)) min_ok = false;
  }
  r.add(min_ok, "a12-minimum", "a12 is the unique order minimum",
        min_ok ? "confirmed" : "violated", "torus weight calculus");
  return r;
}

Report suite_algebra_pfaffian() {
  Report r;
  r.suite = "algebra-pfaffian";
  std::mt19937_64 rng(20240601);

  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const int dim = 2 + 2 * (i % 4);
    const SkewMatrix m = rand_skew(rng, dim);
    const Rat pf = pfaffian(m);
    if (pf * pf != det(to_dense(m))) ++bad;
  }
  r.add(bad == 0, "pf-square-det",
        "Pf(M)^2 = det(M) on 1000 random skew matrices (dims 2-8)",
        bad == 0 ? "all hold" : std::to_string(bad) + " violations",
        "exact recursion vs Gaussian elimination");

  bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const int dim = i % 2 ? 6 : 4;
    const SkewMatrix m = rand_skew(rng, dim);
    const Mat g = rand_square(rng, dim);
    if (pfaffian(conjugate(g, m)) != det(g) * pfaffian(m)) ++bad;
  }
  r.add(bad == 0, "pf-transform",
        "Pf(g M g^t) = det(g) Pf(M) on 1000 random pairs",
        bad == 0 ? "all hold" : std::to_string(bad) + " violations",
        "transformation law");

  bad = 0;
  for (int i = 0; i < 200; ++i) {
    const SkewMatrix m = rand_skew(rng, 4);
    const auto& u = m.upper;  // (a,b,c,d,e,f) in row-major upper order
    if (pfaffian(m) != u[0] * u[5] - u[1] * u[4] + u[2] * u[3]) ++bad;
  }
  r.add(bad == 0, "pf-4x4-closed-form",
        "Pf = af - be + cd on 200 random 4x4 matrices",
        bad == 0 ? "all hold" : std::to_string(bad) + " violations",
        "closed form");

  bad = 0;
  for (int i = 0; i < 200; ++i) {
    Quintuple v;
    for (int s = 0; s < kNumSymbols; ++s)
      v.set_coord(s, Rat(rand_int(rng, -9, 9)));
    std::array<Rat, 5> t;
    for (auto& x : t) x = rand_rat(rng, -5, 5, 4);
    const auto q = sub_pfaffians(v);
    const SkewMatrix m = evaluate(v, t);
    std::array<Rat, 5> kvec;
    for (int j = 0; j < 5; ++j) kvec[j] = evaluate(q[4 - j], t);
    for (int row = 0; row < 5; ++row) {
      Rat acc(0);
      for (int j = 0; j < 5; ++j) acc += m.entry(row, j) * kvec[j];
      if (acc != 0) {
        ++bad;
        break;
      }
    }
  }
  r.add(bad == 0, "kernel-vector",
        "(Q5,...,Q1)(t) lies in ker M(t) on 200 random quintuples",
        bad == 0 ? "all hold" : std::to_string(bad) + " violations",
        "sub-Pfaffian kernel identity");

  bad = 0;
  for (int i = 0; i < 100; ++i) {
    const Quintuple v = pattern_quintuple(rng, 1);
    const auto w = q1_factorization(v);
    if (w.case_id != 1 ||
        product_form(w.f1, w.f2) != qf_neg(sub_pfaffians(v)[0]))
      ++bad;
  }
  r.add(bad == 0, "case1-factorization",
        "-Q1 = M14 * M23 exactly on 100 Case-1 patterns",
        bad == 0 ? "all hold" : std::to_string(bad) + " violations",
        "verified witness");
  return r;
}

Report suite_algebra_screen() {
  Report r;
  r.suite = "algebra-screen";
  std::mt19937_64 rng(20240602);

  // For a pattern vanishing exactly on set k, the screen must return the
  // smallest j whose set is contained in set k.
  const auto& sets = reducibility_sets();
  auto contains = [&](int sup, int sub) {
    for (int s : sets[sub]) {
      bool found = false;
      for (int t : sets[sup]) found = found || t == s;
      if (!found) return false;
    }
    return true;
  };
  bool patterns_ok = true;
  for (int k = 1; k <= 13; ++k) {
    int expected = 0;
    for (int j = 1; j <= 13 && !expected; ++j)
      if (contains(k - 1, j - 1)) expected = j;
    const auto got = reducibility_screen(pattern_quintuple(rng, k));
    if (!got || *got != expected) patterns_ok = false;
  }
  r.add(patterns_ok, "pattern-screens",
        "each vanishing pattern triggers its smallest contained set",
        patterns_ok ? "all 13 agree" : "mismatch", "13 vanishing patterns");

  const auto zero_case = reducibility_screen(Quintuple{});
  r.add(zero_case && *zero_case == 1, "zero-screens-first",
        "the zero quintuple triggers case 1",
        zero_case ? "case " + std::to_string(*zero_case) : "none",
        "smallest case wins");

  bool generic_ok = true;
  for (int trial = 0; trial < 20; ++trial) {
    Quintuple v;
    for (int s = 0; s < kNumSymbols; ++s) {
      Rat q = rand_rat(rng);
      if (q == 0) q = 1;
      v.set_coord(s, q);
    }
    if (reducibility_screen(v)) generic_ok = false;
  }
  r.add(generic_ok, "generic-not-screened",
        "fully nonzero quintuples trigger no screen",
        generic_ok ? "20/20 clean" : "false positive", "randomized");

  const auto model = reducibility_screen(model_element(1, 1));
  r.add(!model, "model-element",
        "the explicit model element triggers no screen",
        model ? "case " + std::to_string(*model) : "none",
        "every screen set contains a12, nonzero on the model");

  const auto w2 = q1_factorization(pattern_quintuple(rng, 2));
  const auto w3 = q1_factorization(pattern_quintuple(rng, 3));
  bool confined = w2.case_id == 2 && w3.case_id == 3;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      confined = confined && w2.q1.gram[i][j] == 0 && w3.q1.gram[i][j] == 0;
  r.add(confined, "gram-confinement",
        "Case-2/3 patterns confine Gram(Q1) to the last row and column",
        confined ? "both confined" : "violation", "verified witness");
  return r;
}

Report suite_roots_verify_tables(const std::string& data_dir) {
  Report r;
  r.suite = "roots-verify-tables";
  const auto [t2, t3] = load_density_tables(data_dir + "/density_tables.txt");

  r.add(t2.rows.size() == 21 && t3.rows.size() == 19, "table-shape",
        "21 rows at p=2 and 19 rows at p=3",
        std::to_string(t2.rows.size()) + " and " +
            std::to_string(t3.rows.size()),
        "shipped density tables");

  for (const auto* t : {&t2, &t3}) {
    const auto rep = verify_table_densities(*t);
    const std::string id = "table" + std::to_string(t->p) + "-verify";
    r.add(rep.ok, id,
          "row densities match residue enumeration; rows disjoint; printed "
          "values are four-place truncations",
          rep.ok ? "all rows verified" : joined(rep.failures),
          "exhaustive residue enumeration");
  }

  r.add(row_sum(t2) == Rat(2037, 2048), "table2-row-sum", "2037/2048",
        rat_string(row_sum(t2)), "exact row data");
  r.add(row_sum(t3) == Rat(59012, 59049), "table3-row-sum", "59012/59049",
        rat_string(row_sum(t3)), "exact row data");
  r.info("unclassified-mass", "-",
         "11/2048 at p=2, 37/59049 at p=3 fall outside the classified band",
         "complement of the row sums");

  const std::array<Rat, 4> cols2 = {Rat(73, 128), Rat(1153, 4096),
                                    Rat(185, 2048), Rat(215, 4096)};
  const std::array<Rat, 4> cols3 = {Rat(257831, 354294), Rat(2, 729),
                                    Rat(4787, 39366), Rat(26093, 177147)};
  r.add(column_totals(t2) == cols2, "table2-columns",
        "73/128, 1153/4096, 185/2048, 215/4096",
        "exact class masses match", "exact row data");
  r.add(column_totals(t3) == cols3, "table3-columns",
        "257831/354294, 2/729, 4787/39366, 26093/177147",
        "exact class masses match", "exact row data");

  struct Pin {
    long p;
    long a, b;
    int row;  // 0 = unclassified
  };
  const Pin pins[] = {{2, 1, 1, 1},  {2, 1, 2, 15}, {2, 61, 2, 0},
                      {3, 1, 1, 1},  {3, 3, 2, 15}, {3, 61, 2, 1}};
  bool classify_ok = true;
  std::string classify_actual;
  for (const auto& pin : pins) {
    const auto& t = pin.p == 2 ? t2 : t3;
    const auto row = classify_row(t, EllipticCurve{Int(pin.a), Int(pin.b)});
    const int got = row ? *row : 0;
    if (got != pin.row) classify_ok = false;
    if (!classify_actual.empty()) classify_actual += ", ";
    classify_actual += "(" + std::to_string(pin.a) + "," +
                       std::to_string(pin.b) + ")@" + std::to_string(pin.p) +
                       (row ? "->row " + std::to_string(got) : "->none");
  }
  r.add(classify_ok, "classify-examples",
        "rows 1, 15, none, 1, 15, 1 for the six sample curves",
        classify_actual, "frozen classifications");
  return r;
}

Report suite_roots_densities(const std::string& data_dir) {
  Report r;
  r.suite = "roots-densities";

  for (long p : {5L, 7L, 11L}) {
    const auto counts = enumerate_reduction(p, 3);
    const Int classes = pow_int(p, 6);
    auto matches = [&](ReductionType ty, long v, LocalEvent ev) {
      const auto it = counts.find({ty, v});
      const long n = it == counts.end() ? 0 : static_cast<long>(it->second);
      return Rat(Int(n)) == local_density(p, ev) * Rat(classes);
    };
    const bool ok = matches(ReductionType::Good, 0, LocalEvent::Good) &&
                    matches(ReductionType::Multiplicative, 1,
                            LocalEvent::Mult1) &&
                    matches(ReductionType::Multiplicative, 2,
                            LocalEvent::Mult2) &&
                    matches(ReductionType::Additive, 2, LocalEvent::Add2);
    r.add(ok, "enumeration-p" + std::to_string(p),
          "closed-form densities match residue counts mod p^3",
          ok ? "good, mult v=1,2 and add v=2 all match" : "mismatch",
          "exhaustive enumeration");
  }
  {
    const auto counts = enumerate_reduction(5, 5);
    const bool ok =
        counts.at({ReductionType::Multiplicative, 3}) == 50000 &&
        counts.at({ReductionType::Additive, 3}) == 62500 &&
        counts.at({ReductionType::Additive, 4}) == 12500;
    r.add(ok, "enumeration-p5-depth5",
          "mult v=3: 50000, add v=3: 62500, add v=4: 12500 classes mod 5^5",
          ok ? "all three match" : "mismatch", "exhaustive enumeration");
  }

  bool cond_ok = true;
  for (long p : {5L, 7L, 11L, 101L}) {
    if (cond1_density(p) + cond2_density(p) != 1 - pow_rat(Rat(p), -4))
      cond_ok = false;
    if (cond2_density(p) / cond1_density(p) !=
        Rat(Int(p), Int(p) * p * p + Int(p) * p + 1))
      cond_ok = false;
  }
  r.add(cond_ok, "cond-split",
        "cond1 + cond2 = 1 - 1/p^4 and cond2/cond1 = p/(p^3+p^2+1)",
        cond_ok ? "identities hold at p = 5, 7, 11, 101" : "violated",
        "closed forms");

  const auto eu = density_F3_F4(kCond2PrimeBound);
  r.add(eu.cond2_primes == 618, "cond2-prime-count",
        "618 admissible primes up to 10^4", std::to_string(eu.cond2_primes),
        "sieve");
  r.add(eu.F4_lower >= parse_rat_or_throw("0.0326"), "f4-lower",
        ">= 0.0326", decimal_string(eu.F4_lower, 10) + " (rigorous lower bound)",
        "directed 192-bit product");
  r.add(eu.F3_lower > parse_rat_or_throw("0.96686") &&
            eu.F3_lower < parse_rat_or_throw("0.96689"),
        "f3-lower-window", "in (0.96686, 0.96689)",
        decimal_string(eu.F3_lower, 10) + " (rigorous lower bound)",
        "directed 192-bit product");
  const Rat f3_up = density_F3_upper(1000000);
  r.add(f3_up < parse_rat_or_throw("0.96689") && f3_up > eu.F3_lower,
        "f3-upper-window", "below 0.96689 and above the lower bound",
        decimal_string(f3_up, 12) + " (ceiling-rounded truncation at 10^6)",
        "directed 192-bit product");
  r.info("f3-vs-quoted", ">= 0.96689 (quoted four-place constant)",
         "rigorous bounds put the product in (" +
             decimal_string(eu.F3_lower, 10) + ", " + decimal_string(f3_up, 12) +
             "); it rounds to 0.96689 but never reaches it, so the quoted "
             "threshold is unattainable and tracked here as informational",
         "documented deviation");

  const auto [t2, t3] = load_density_tables(data_dir + "/density_tables.txt");
  const auto [f1, f2] = density_F1_F2(t2, t3);
  const auto [g1, g2] = density_F1_F2_printed(t2, t3);
  r.add(f1 >= parse_rat_or_throw("0.5910") &&
            f2 >= parse_rat_or_throw("0.4026") &&
            g1 >= parse_rat_or_throw("0.5910") &&
            g2 >= parse_rat_or_throw("0.4026"),
        "f1-f2-thresholds", "F1 >= 0.5910 and F2 >= 0.4026 in both variants",
        "exact rows: " + decimal_string(f1, 8) + " / " + decimal_string(f2, 8) +
            "; printed columns: " + decimal_string(g1, 8) + " / " +
            decimal_string(g2, 8),
        "table data");
  const Rat d1 = abs_rat(f1 - parse_rat_or_throw("0.59179"));
  const Rat d2 = abs_rat(f2 - parse_rat_or_throw("0.4032"));
  r.add(d1 < parse_rat_or_throw("0.002") && d2 < parse_rat_or_throw("0.002"),
        "f1-f2-near-quoted",
        "within 0.002 of the quoted 0.59179 and 0.4032",
        "deviations " + decimal_string(d1, 6) + " and " + decimal_string(d2, 6),
        "documented deviation");

  const auto quoted =
      assemble_families(parse_rat_or_throw("0.59179"), parse_rat_or_throw("0.4032"),
                        parse_rat_or_throw("0.96689"), parse_rat_or_throw("0.0326"));
  r.add(quoted.Fplus == parse_rat_or_throw("0.409142402") &&
            quoted.Fplus >= parse_rat_or_throw("0.40914"),
        "fplus-quoted", "0.409142402 and >= 0.40914",
        rat_string(quoted.Fplus), "assembly of quoted constants");
  r.add(quoted.Fminus == parse_rat_or_throw("0.5853401531") &&
            quoted.Fminus >= parse_rat_or_throw("0.58534"),
        "fminus-quoted", "0.5853401531 and >= 0.58534",
        rat_string(quoted.Fminus), "assembly of quoted constants");
  r.add(quoted.Ftotal == parse_rat_or_throw("0.55010060288") &&
            quoted.Ftotal >= parse_rat_or_throw("0.5501"),
        "ftotal-quoted", "0.55010060288 and >= 0.5501",
        rat_string(quoted.Ftotal), "assembly of quoted constants");

  const auto exact = assemble_families(f1, f2, eu.F3_lower, eu.F4_lower);
  r.add(exact.Ftotal > parse_rat_or_throw("0.5495") &&
            exact.Ftotal < parse_rat_or_throw("0.5496"),
        "ftotal-exact-window", "in (0.5495, 0.5496)",
        decimal_string(exact.Ftotal, 12) +
            " from exact rows and rigorous product bounds",
        "exact assembly");
  const auto printed = assemble_families(g1, g2, eu.F3_lower, eu.F4_lower);
  r.info("ftotal-printed", "0.54937 (quoted assembly)",
         decimal_string(printed.Ftotal, 12) +
             " from printed columns and rigorous product bounds; the quoted "
             "value is not reproduced exactly by any shipped variant",
         "documented deviation");
  return r;
}

Report suite_ranks_bounds() {
  Report r;
  r.suite = "ranks-bounds";

  auto run = [](RankObjective obj, bool parity, const Rat& avg, long rmax) {
    RankProgram p;
    p.objective = obj;
    p.parity = parity;
    p.avg = avg;
    p.rmax = rmax;
    return solve_rank(p);
  };

  {
    const auto s = run(RankObjective::AverageRank, false, Rat(6), 40);
    const bool ok = s.status == LPStatus::Optimal && s.optimum == Rat(21, 20) &&
                    s.certified && s.x[1] == Rat(19, 20) &&
                    s.x[2] == Rat(1, 20);
    r.add(ok, "avg-rank", "optimum 21/20 at masses (0, 19/20, 1/20, 0, ...)",
          "optimum " + rat_string(s.optimum) + ", dual certificate verified",
          "exact simplex");
  }
  {
    const auto s = run(RankObjective::AverageRank, true, Rat(6), 40);
    RankProgram p;
    p.objective = RankObjective::AverageRank;
    p.parity = true;
    const auto lp = build_rank_lp(p);
    std::vector<Rat> w(lp.c.size(), Rat(0));
    w[0] = Rat(3, 8);
    w[1] = Rat(1, 2);
    w[2] = Rat(1, 8);
    const bool ok = s.status == LPStatus::Optimal && s.optimum == Rat(3, 4) &&
                    s.certified && check_feasible(lp, w) &&
                    objective_value(lp, w) == s.optimum;
    r.add(ok, "avg-rank-parity",
          "optimum 3/4, attained by the split (3/8, 1/2, 1/8)",
          "optimum " + rat_string(s.optimum) + ", witness feasible and optimal",
          "exact simplex");
  }
  {
    const auto s = run(RankObjective::MassRank01, false, Rat(6), 40);
    r.add(s.status == LPStatus::Optimal && s.optimum == Rat(19, 24) &&
              s.certified,
          "mass01", "minimum rank-0/1 mass 19/24",
          "optimum " + rat_string(s.optimum) + ", dual certificate verified",
          "exact simplex");
  }
  {
    const auto s = run(RankObjective::MassRank01, true, Rat(6), 40);
    r.add(s.status == LPStatus::Optimal && s.optimum == Rat(7, 8) &&
              s.certified,
          "mass01-parity", "minimum rank-0/1 mass 7/8",
          "optimum " + rat_string(s.optimum) + ", dual certificate verified",
          "exact simplex");
  }
  {
    const auto s = run(RankObjective::MassRank0, true, Rat(6), 40);
    r.add(s.status == LPStatus::Optimal && s.optimum == Rat(3, 8) &&
              s.certified,
          "mass0-parity", "minimum rank-0 mass 3/8",
          "optimum " + rat_string(s.optimum) + ", dual certificate verified",
          "exact simplex");
  }

  {
    bool ok = true;
    for (const char* avg_s : {"6", "13/2", "27/2", "15"}) {
      const Rat avg = parse_rat_or_throw(avg_s);
      const auto s = run(RankObjective::MassRank0, true, avg, 40);
      ok = ok && s.status == LPStatus::Optimal &&
           s.optimum == rank0_chain_bound(avg);
    }
    r.add(ok, "chain-consistency",
          "linear program equals the closed-form chain bound at four budgets",
          ok ? "max(0, (15 - avg)/24) reproduced" : "mismatch",
          "closed-form chain");
  }
  {
    struct Pin {
      RankObjective obj;
      bool parity;
      Rat opt;
    };
    const Pin pins[] = {{RankObjective::AverageRank, false, Rat(21, 20)},
                        {RankObjective::AverageRank, true, Rat(3, 4)},
                        {RankObjective::MassRank01, false, Rat(19, 24)},
                        {RankObjective::MassRank01, true, Rat(7, 8)},
                        {RankObjective::MassRank0, true, Rat(3, 8)}};
    bool ok = true;
    for (const auto& pin : pins)
      for (long rmax : {10L, 20L, 40L}) {
        const auto s = run(pin.obj, pin.parity, Rat(6), rmax);
        ok = ok && s.status == LPStatus::Optimal && s.optimum == pin.opt &&
             s.certified;
      }
    r.add(ok, "truncation-stability",
          "optima unchanged for rank cutoffs 10, 20, 40",
          ok ? "all five programs stable" : "cutoff-dependent optimum",
          "exact simplex");
  }

  {
    const auto a = verify_inequality(GadgetKind::AllRanks, 100);
    r.add(a.ok() && a.equalities == std::vector<long>{1, 2}, "gadget-5n-all",
          "20n - 15 dominates with equality exactly at n = 1, 2",
          a.ok() ? "verified to n = 100 with dominance certificate"
                 : joined(a.failures),
          "linear gadget");
    const auto e = verify_inequality(GadgetKind::EvenCounts, 100);
    r.add(e.ok() && e.equalities == std::vector<long>{0, 2}, "gadget-5n-even",
          "12n + 1 dominates on even n with equality exactly at n = 0, 2",
          e.ok() ? "verified to n = 100 with dominance certificate"
                 : joined(e.failures),
          "linear gadget");
    const auto o = verify_inequality(GadgetKind::OddCounts, 100);
    r.add(o.ok() && o.equalities == std::vector<long>{1, 3}, "gadget-5n-odd",
          "60n - 55 dominates on odd n with equality exactly at n = 1, 3",
          o.ok() ? "verified to n = 100 with dominance certificate"
                 : joined(o.failures),
          "linear gadget");
  }

  {
    const Rat mu = parse_rat_or_throw("0.5501");
    const Rat avg = combine(mu, parse_rat_or_throw("0.75"),
                            parse_rat_or_throw("1.05"), CombineMode::AvgRank);
    r.add(avg == parse_rat_or_throw("0.88497") &&
              avg < parse_rat_or_throw("0.885"),
          "combined-average", "0.88497, below 0.885", rat_string(avg),
          "family-weighted combination");
    const Rat r01 = combine(mu, Rat(7, 8), Rat(19, 24), CombineMode::Rank01);
    r.add(r01 == Rat(100501, 120000) && r01 >= parse_rat_or_throw("0.8375"),
          "combined-mass01", "100501/120000, at least 0.8375", rat_string(r01),
          "family-weighted combination");
    const Rat r0 = combine(mu, Rat(3, 8), Rat(0), CombineMode::Rank0);
    r.add(r0 == parse_rat_or_throw("0.2062875") &&
              r0 >= parse_rat_or_throw("0.2062"),
          "combined-mass0", "0.2062875, at least 0.2062", rat_string(r0),
          "family-weighted combination");
  }
  return r;
}

Report suite_count() {
  Report r;
  r.suite = "count";

  const Int hundred(100);
  r.add(count_ij(hundred, DiscSign::Positive) == 66 &&
            count_ij_brute(hundred, DiscSign::Positive) == 66,
        "ij-100", "66 positive pairs below height 100 (3 + 11 + 21 + 31)",
        "closed form and two-dimensional scan both give " +
            count_ij(hundred, DiscSign::Positive).get_str(),
        "brute-force oracle");

  {
    bool ok = true;
    for (long x : {1L, 100L, 10000L}) {
      const auto c = count_ij_total(Int(x));
      ok = ok && c.total() == count_ij_box(Int(x));
    }
    const auto c4 = count_ij_total(Int(10000));
    ok = ok && c4.plus == count_ij_brute(Int(10000), DiscSign::Positive) &&
         c4.minus == count_ij_brute(Int(10000), DiscSign::Negative) &&
         c4.zero == count_ij_brute(Int(10000), DiscSign::Zero);
    r.add(ok, "ij-partition",
          "three signs partition the height box; scan agrees at 10^4",
          ok ? "partition and scan both confirmed" : "mismatch",
          "partition identity");
  }

  {
    const char* kPlus[] = {"3425", "158007", "7440216", "344735782",
                           "15998000527"};
    const char* kMinus[] = {"13723", "637775", "29718812", "1378859816",
                            "63997979275"};
    bool ok = true;
    std::string actual;
    for (int i = 0; i < 5; ++i) {
      const Int X = pow_int(10, 4 + 2 * static_cast<unsigned long>(i));
      const Int np = count_ij(X, DiscSign::Positive);
      const Int nm = count_ij(X, DiscSign::Negative);
      ok = ok && np == Int(kPlus[i]) && nm == Int(kMinus[i]);
      if (!actual.empty()) actual += ", ";
      actual += np.get_str() + "/" + nm.get_str();
    }
    r.add(ok, "ij-decades",
          "frozen counts at heights 10^4, 10^6, 10^8, 10^10, 10^12", actual,
          "frozen counts");
  }

  {
    bool ok = true;
    for (unsigned long k = 4; k <= 12; ++k) {
      const Int X = pow_int(10, k);
      ok = ok && check_envelope(X, DiscSign::Positive).ok() &&
           check_envelope(X, DiscSign::Negative).ok();
    }
    r.add(ok, "growth-envelope",
          "|count - c X^(5/6)| <= 5 X^(1/2) certified at 10^4 .. 10^12",
          ok ? "integer certificates hold for both signs in all nine decades"
             : "envelope violated",
          "integer envelope certificate");
  }

  {
    const double ep = fitted_exponent(DiscSign::Positive);
    const double em = fitted_exponent(DiscSign::Negative);
    const double lo = 5.0 / 6.0 - 0.01, hi = 5.0 / 6.0 + 0.01;
    r.add(ep >= lo && ep <= hi && em >= lo && em <= hi, "exponent-fit",
          "least-squares slope within 5/6 +- 0.01 for both signs",
          fmt_double(ep) + " and " + fmt_double(em), "nine-decade fit");
  }

  for (RegionKind kind :
       {RegionKind::Cube, RegionKind::Disk, RegionKind::Simplex}) {
    const auto rep = davenport_grid(kind);
    const char* name = kind == RegionKind::Cube   ? "cube"
                       : kind == RegionKind::Disk ? "disk"
                                                  : "simplex";
    Rat worst(0);
    for (const auto& row : rep.rows)
      if (row.ratio > worst) worst = row.ratio;
    r.add(rep.ok, std::string("davenport-") + name,
          "count-vs-volume ratio at most " + rat_string(rep.bound) +
              " across t = 10 .. 160",
          "worst ratio " + rat_string(worst), "count-vs-volume grid");
  }
  return r;
}

std::vector<Report> run_all(const std::string& data_dir, int threads) {
  std::vector<std::function<Report()>> fns = {
      [&] { return suite_cusp_verify(data_dir); },
      [] { return suite_cusp_partition(); },
      [] { return suite_algebra_pfaffian(); },
      [] { return suite_algebra_screen(); },
      [&] { return suite_roots_verify_tables(data_dir); },
      [&] { return suite_roots_densities(data_dir); },
      [] { return suite_ranks_bounds(); },
      [] { return suite_count(); },
  };

  std::vector<Report> out;
  if (threads <= 1) {
    for (auto& fn : fns) out.push_back(fn());
    return out;
  }
  std::counting_semaphore<> slots(threads);
  std::vector<std::future<Report>> futs;
  futs.reserve(fns.size());
  for (auto& fn : fns)
    futs.push_back(std::async(std::launch::async, [&slots, fn] {
      slots.acquire();
      struct Release {
        std::counting_semaphore<>& s;
        ~Release() { s.release(); }
      } release{slots};
      return fn();
    }));
  out.reserve(futs.size());
  for (auto& f : futs) out.push_back(f.get());
  return out;
}

}  // namespace fivesel
