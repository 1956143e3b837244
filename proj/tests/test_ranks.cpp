#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fivesel/rankbounds.hpp"
#include "fivesel/simplex.hpp"

using namespace fivesel;

namespace {

LinearProgram make(Sense s, std::vector<Rat> c, std::vector<Constraint> rows) {
  LinearProgram lp;
  lp.sense = s;
  lp.c = std::move(c);
  lp.rows = std::move(rows);
  return lp;
}

Constraint row(std::vector<Rat> a, Relation rel, Rat b) {
  return Constraint{std::move(a), rel, std::move(b)};
}

Rat dec(const char* s) { return parse_rat_or_throw(s); }

}  // namespace

TEST_CASE("simplex solves small programs with certificates") {
  auto lp = make(Sense::Maximize, {Rat(1), Rat(1)},
                 {row({Rat(1), Rat(0)}, Relation::LessEq, Rat(1)),
                  row({Rat(0), Rat(1)}, Relation::LessEq, Rat(2))});
  auto s = solve_lp(lp);
  REQUIRE(s.status == LPStatus::Optimal);
  CHECK(s.optimum == 3);
  CHECK(s.x == std::vector<Rat>{Rat(1), Rat(2)});
  CHECK(s.y == std::vector<Rat>{Rat(1), Rat(1)});
  CHECK(s.certified);
  CHECK(check_feasible(lp, s.x));
  CHECK(check_certificate(lp, s));

  auto lp2 = make(Sense::Minimize, {Rat(2), Rat(3)},
                  {row({Rat(1), Rat(1)}, Relation::GreaterEq, Rat(4)),
                   row({Rat(1), Rat(-1)}, Relation::Equal, Rat(1))});
  auto s2 = solve_lp(lp2);
  REQUIRE(s2.status == LPStatus::Optimal);
  CHECK(s2.optimum == Rat(19, 2));
  CHECK(s2.x == std::vector<Rat>{Rat(5, 2), Rat(3, 2)});
  CHECK(s2.certified);

  // Negative right-hand side exercises the row normalization.
  auto lp3 = make(Sense::Minimize, {Rat(1)},
                  {row({Rat(-1)}, Relation::GreaterEq, Rat(-5))});
  auto s3 = solve_lp(lp3);
  REQUIRE(s3.status == LPStatus::Optimal);
  CHECK(s3.optimum == 0);
  CHECK(s3.certified);
}

TEST_CASE("simplex reports infeasible and unbounded programs") {
  auto bad = make(Sense::Maximize, {Rat(1)},
                  {row({Rat(1)}, Relation::LessEq, Rat(-1))});
  CHECK(solve_lp(bad).status == LPStatus::Infeasible);

  auto unb = make(Sense::Maximize, {Rat(1)},
                  {row({Rat(1)}, Relation::GreaterEq, Rat(1))});
  CHECK(solve_lp(unb).status == LPStatus::Unbounded);

  auto mismatched = make(Sense::Maximize, {Rat(1), Rat(1)},
                         {row({Rat(1)}, Relation::LessEq, Rat(1))});
  CHECK_THROWS_AS(solve_lp(mismatched), std::invalid_argument);
}

TEST_CASE("anti-cycling rule survives a classically degenerate program") {
  // A textbook example that cycles forever under the largest-coefficient
  // pivot rule; Bland's rule must terminate at 1/20.
  auto lp = make(
      Sense::Maximize, {Rat(3, 4), Rat(-150), Rat(1, 50), Rat(-6)},
      {row({Rat(1, 4), Rat(-60), Rat(-1, 25), Rat(9)}, Relation::LessEq,
           Rat(0)),
       row({Rat(1, 2), Rat(-90), Rat(-1, 50), Rat(3)}, Relation::LessEq,
           Rat(0)),
       row({Rat(0), Rat(0), Rat(1), Rat(0)}, Relation::LessEq, Rat(1))});
  auto s = solve_lp(lp);
  REQUIRE(s.status == LPStatus::Optimal);
  CHECK(s.optimum == Rat(1, 20));
  CHECK(s.certified);
  CHECK(check_feasible(lp, s.x));
  CHECK(objective_value(lp, s.x) == Rat(1, 20));
}

TEST_CASE("average rank programs reproduce the quoted optima") {
  RankProgram base;
  auto s = solve_rank(base);
  REQUIRE(s.status == LPStatus::Optimal);
  CHECK(s.optimum == Rat(21, 20));
  CHECK(s.certified);
  CHECK(s.x[1] == Rat(19, 20));
  CHECK(s.x[2] == Rat(1, 20));
  Rat rest(0);
  for (size_t r = 0; r < s.x.size(); ++r)
    if (r != 1 && r != 2) rest += s.x[r];
  CHECK(rest == 0);
  CHECK(s.y == std::vector<Rat>{Rat(3, 4), Rat(1, 20)});

  RankProgram par;
  par.parity = true;
  auto sp = solve_rank(par);
  REQUIRE(sp.status == LPStatus::Optimal);
  CHECK(sp.optimum == Rat(3, 4));
  CHECK(sp.certified);
  // The quoted split (3/8, 1/2, 1/8) is feasible and attains the optimum.
  auto lp = build_rank_lp(par);
  std::vector<Rat> w(lp.c.size(), Rat(0));
  w[0] = Rat(3, 8);
  w[1] = Rat(1, 2);
  w[2] = Rat(1, 8);
  CHECK(check_feasible(lp, w));
  CHECK(objective_value(lp, w) == sp.optimum);

  RankProgram tight;
  tight.avg = 1;
  auto st = solve_rank(tight);
  REQUIRE(st.status == LPStatus::Optimal);
  CHECK(st.optimum == 0);
  CHECK(st.x[0] == 1);

  RankProgram impossible;
  impossible.avg = 1;
  impossible.parity = true;  // needs mean at least (1 + 5)/2 = 3
  CHECK(solve_rank(impossible).status == LPStatus::Infeasible);
}

TEST_CASE("low-rank mass bounds") {
  RankProgram r01;
  r01.objective = RankObjective::MassRank01;
  auto s = solve_rank(r01);
  REQUIRE(s.status == LPStatus::Optimal);
  CHECK(s.optimum == Rat(19, 24));
  CHECK(s.certified);

  RankProgram r01p = r01;
  r01p.parity = true;
  auto sp = solve_rank(r01p);
  REQUIRE(sp.status == LPStatus::Optimal);
  CHECK(sp.optimum == Rat(7, 8));
  CHECK(sp.certified);
  // The quoted optimum witness satisfies the quoted scalar forms with
  // equality: 24 x0 + 120 x1 >= 69 and x1 <= 1/2.
  auto lp = build_rank_lp(r01p);
  std::vector<Rat> w(lp.c.size(), Rat(0));
  w[0] = Rat(3, 8);
  w[1] = Rat(1, 2);
  w[2] = Rat(1, 8);
  CHECK(check_feasible(lp, w));
  CHECK(objective_value(lp, w) == Rat(7, 8));
  CHECK(24 * w[0] + 120 * w[1] == 69);
  CHECK(w[1] == Rat(1, 2));

  RankProgram slack = r01;
  slack.avg = 25;  // all mass fits at rank 2
  auto ss = solve_rank(slack);
  REQUIRE(ss.status == LPStatus::Optimal);
  CHECK(ss.optimum == 0);
}

TEST_CASE("parity rank-0 bound matches the closed-form chain") {
  const Rat avgs[] = {Rat(6), Rat(13, 2), Rat(27, 2), Rat(15), Rat(20)};
  for (const Rat& avg : avgs) {
    RankProgram p;
    p.objective = RankObjective::MassRank0;
    p.parity = true;
    p.avg = avg;
    auto s = solve_rank(p);
    REQUIRE(s.status == LPStatus::Optimal);
    CHECK(s.optimum == rank0_chain_bound(avg));
    CHECK(s.certified);
  }
  CHECK(rank0_chain_bound(Rat(6)) == Rat(3, 8));
  CHECK(rank0_chain_bound(Rat(13, 2)) == Rat(17, 48));
  // The chain stays strictly positive up to avg = 15; at 27/2 it still
  // forces 1/16 of the mass to rank zero.
  CHECK(rank0_chain_bound(Rat(27, 2)) == Rat(1, 16));
  CHECK(rank0_chain_bound(Rat(15)) == 0);
  CHECK(rank0_chain_bound(Rat(20)) == 0);

  RankProgram noparity;
  noparity.objective = RankObjective::MassRank0;
  CHECK_THROWS_AS(build_rank_lp(noparity), std::invalid_argument);
}

TEST_CASE("optima are stable across truncation ranks") {
  struct Expect {
    RankObjective objective;
    bool parity;
    Rat optimum;
  };
  const Expect cases[] = {
      {RankObjective::AverageRank, false, Rat(21, 20)},
      {RankObjective::AverageRank, true, Rat(3, 4)},
      {RankObjective::MassRank01, false, Rat(19, 24)},
      {RankObjective::MassRank01, true, Rat(7, 8)},
      {RankObjective::MassRank0, true, Rat(3, 8)},
  };
  for (const auto& c : cases)
    for (long rmax : {10L, 20L, 40L}) {
      RankProgram p;
      p.objective = c.objective;
      p.parity = c.parity;
      p.rmax = rmax;
      auto s = solve_rank(p);
      REQUIRE(s.status == LPStatus::Optimal);
      CHECK(s.optimum == c.optimum);
      CHECK(s.certified);
    }
}

TEST_CASE("program validation") {
  RankProgram bad;
  bad.rmax = 1;
  CHECK_THROWS_AS(build_rank_lp(bad), std::invalid_argument);
  RankProgram zero;
  zero.avg = 0;
  CHECK_THROWS_AS(build_rank_lp(zero), std::invalid_argument);
}

TEST_CASE("family-weighted combinations") {
  const Rat avg = combine(dec("0.5501"), dec("0.75"), dec("1.05"),
                          CombineMode::AvgRank);
  CHECK(avg == dec("0.88497"));
  CHECK(avg < dec("0.885"));

  const Rat r01 = combine(dec("0.5501"), Rat(7, 8), Rat(19, 24),
                          CombineMode::Rank01);
  CHECK(r01 == Rat(100501, 120000));
  CHECK(r01 >= dec("0.8375"));

  const Rat r0 = combine(dec("0.5501"), Rat(3, 8), Rat(0), CombineMode::Rank0);
  CHECK(r0 == dec("0.2062875"));
  CHECK(r0 >= dec("0.2062"));

  CHECK_THROWS_AS(combine(Rat(2), Rat(1), Rat(1), CombineMode::AvgRank),
                  std::invalid_argument);
  CHECK_THROWS_AS(combine(Rat(-1, 2), Rat(1), Rat(1), CombineMode::AvgRank),
                  std::invalid_argument);
  CHECK_THROWS_AS(combine(Rat(1, 2), Rat(-1), Rat(0), CombineMode::Rank0),
                  std::invalid_argument);
}

TEST_CASE("inequality gadgets with dominance certificates") {
  auto a = verify_inequality(GadgetKind::AllRanks, 100);
  CHECK(a.ok());
  CHECK(a.direct_ok);
  CHECK(a.dominance_ok);
  CHECK(a.equalities == std::vector<long>{1, 2});
  CHECK(a.anchor == 2);
  CHECK(a.failures.empty());

  auto e = verify_inequality(GadgetKind::EvenCounts, 100);
  CHECK(e.ok());
  CHECK(e.equalities == std::vector<long>{0, 2});
  CHECK(e.anchor == 2);

  auto o = verify_inequality(GadgetKind::OddCounts, 100);
  CHECK(o.ok());
  CHECK(o.equalities == std::vector<long>{1, 3});
  CHECK(o.anchor == 3);

  CHECK_THROWS_AS(verify_inequality(GadgetKind::AllRanks, 4),
                  std::invalid_argument);
}
