#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fivesel/families.hpp"
#include "fivesel/tables.hpp"

using namespace fivesel;

namespace {

const std::pair<DensityTable, DensityTable>& shipped() {
  static std::pair<DensityTable, DensityTable> t = load_density_tables(
      std::string(FIVESEL_DATA_DIR) + "/density_tables.txt");
  return t;
}

Rat dec(const char* s) { return parse_rat_or_throw(s); }

}  // namespace

TEST_CASE("euler bounds at the base truncation") {
  auto eb = density_F3_F4(10000);
  CHECK(eb.prime_bound == 10000);
  CHECK(eb.cond2_primes == 618);

  CHECK(decimal_string(eb.F3_core, 10) == "0.9668939841");
  CHECK(decimal_string(eb.F4_core, 10) == "0.0326063170");

  CHECK(eb.S1 > 0);
  CHECK(eb.S2 > 0);
  CHECK(eb.S2 < eb.S1);
  CHECK(eb.tail_floor == Rat(99997499, 100000000));

  // The two cores share the same truncated product, so they satisfy an
  // exact cross identity through the pair mass.
  const Rat pair = (eb.S1 * eb.S1 - eb.S2) / 2;
  CHECK(eb.F4_core * (1 + pair) == eb.F3_core * eb.S1);

  CHECK(eb.F3_lower == eb.F3_core * eb.tail_floor);
  CHECK(eb.F4_lower == eb.F4_core * eb.tail_floor);
  CHECK(eb.F3_lower < eb.F3_core);
  CHECK(eb.F4_lower < eb.F4_core);

  // The rigorous lower bound for the no-sign-change family falls a hair
  // short of the quoted 0.96689; the single-change family clears 0.0326.
  CHECK(eb.F3_lower > dec("0.96686"));
  CHECK(eb.F3_lower < dec("0.96689"));
  CHECK(eb.F4_lower >= dec("0.0326"));
  CHECK(eb.F4_lower < dec("0.03261"));

  CHECK_THROWS_AS(density_F3_F4(9999), std::invalid_argument);
  CHECK_THROWS_AS(density_F3_upper(5000), std::invalid_argument);
}

TEST_CASE("tightening the truncation raises the lower bounds slightly") {
  auto a = density_F3_F4(10000);
  auto b = density_F3_F4(20000);
  CHECK(b.F3_lower > a.F3_lower);
  CHECK(b.F4_lower > a.F4_lower);
  CHECK(b.F3_lower - a.F3_lower < dec("0.0001"));
  CHECK(b.F4_lower - a.F4_lower < dec("0.0001"));

  auto c = density_F3_F4(100000);
  CHECK(c.F3_lower > b.F3_lower);
  CHECK(c.F4_lower > b.F4_lower);
  // Even a tenfold longer product stays short of the quoted constant.
  CHECK(c.F3_lower < dec("0.96689"));
}

TEST_CASE("upper bound pins the no-change family below the quoted constant") {
  auto eb = density_F3_F4(10000);
  const Rat up = density_F3_upper(1000000);
  CHECK(up > eb.F3_lower);
  CHECK(up > dec("0.9668891"));
  CHECK(up < dec("0.9668893"));
  CHECK(up < dec("0.96689"));  // the true density rounds to, but is below, 0.96689
  CHECK(density_F3_upper(10000) > up);
}

TEST_CASE("assembled families from the quoted constants") {
  auto fb = assemble_families(dec("0.59179"), dec("0.4032"), dec("0.96689"),
                              dec("0.0326"));
  CHECK(fb.F1 == dec("0.59179"));
  CHECK(fb.F4 == dec("0.0326"));
  CHECK(fb.Fplus == dec("0.409142402"));
  CHECK(fb.Fminus == dec("0.5853401531"));
  CHECK(fb.Ftotal == dec("0.55010060288"));
  CHECK(fb.Fplus >= dec("0.40914"));
  CHECK(fb.Fminus >= dec("0.58534"));
  CHECK(fb.Ftotal >= dec("0.5501"));
  CHECK(fb.Ftotal * 5 == fb.Fplus + 4 * fb.Fminus);
  CHECK(Rat(1, 5) + Rat(4, 5) == 1);
}

TEST_CASE("assembled families from the verified tables") {
  const auto& [t2, t3] = shipped();
  auto eb = density_F3_F4(10000);

  auto [f1, f2] = density_F1_F2(t2, t3);
  auto fb = assemble_families(f1, f2, eb.F3_lower, eb.F4_lower);
  CHECK(fb.Ftotal > dec("0.5495"));
  CHECK(fb.Ftotal < dec("0.5496"));

  auto [p1, p2] = density_F1_F2_printed(t2, t3);
  auto pb = assemble_families(p1, p2, eb.F3_lower, eb.F4_lower);
  CHECK(pb.Ftotal > dec("0.5493"));
  CHECK(pb.Ftotal < dec("0.54937"));

  // The fully table-derived assembly dominates the printed-total variant,
  // since truncation only discards mass.
  CHECK(fb.Ftotal > pb.Ftotal);
}
