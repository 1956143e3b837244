#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fivesel/families.hpp"
#include "fivesel/tables.hpp"

using namespace fivesel;

namespace {

std::string tables_path() {
  return std::string(FIVESEL_DATA_DIR) + "/density_tables.txt";
}

const std::pair<DensityTable, DensityTable>& shipped() {
  static std::pair<DensityTable, DensityTable> t =
      load_density_tables(tables_path());
  return t;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("shipped table file loads with expected shape") {
  const auto& [t2, t3] = shipped();
  CHECK(t2.p == 2);
  CHECK(t3.p == 3);
  CHECK(t2.rows.size() == 21);
  CHECK(t3.rows.size() == 19);
  for (const auto* t : {&t2, &t3})
    for (size_t i = 0; i < t->rows.size(); ++i)
      CHECK(t->rows[i].id == static_cast<int>(i) + 1);
}

TEST_CASE("row sums and classified mass") {
  const auto& [t2, t3] = shipped();
  CHECK(row_sum(t2) == Rat(2037, 2048));
  CHECK(row_sum(t3) == Rat(59012, 59049));
  CHECK(1 - row_sum(t2) == Rat(11, 2048));
  CHECK(1 - row_sum(t3) == Rat(37, 59049));
}

TEST_CASE("exact column totals") {
  const auto& [t2, t3] = shipped();
  auto c2 = column_totals(t2);
  CHECK(c2[0] == Rat(73, 128));
  CHECK(c2[1] == Rat(1153, 4096));
  CHECK(c2[2] == Rat(185, 2048));
  CHECK(c2[3] == Rat(215, 4096));
  CHECK(c2[0] + c2[1] + c2[2] + c2[3] == row_sum(t2));

  auto c3 = column_totals(t3);
  CHECK(c3[0] == Rat(257831, 354294));
  CHECK(c3[1] == Rat(2, 729));
  CHECK(c3[2] == Rat(4787, 39366));
  CHECK(c3[3] == Rat(26093, 177147));
  CHECK(c3[0] + c3[1] + c3[2] + c3[3] == row_sum(t3));
}

TEST_CASE("printed totals are 4-place truncations of the exact values") {
  const auto& [t2, t3] = shipped();
  CHECK(t2.printed_total == parse_rat_or_throw("0.9946"));
  CHECK(t2.printed_cols[0] == parse_rat_or_throw("0.5703"));
  CHECK(t2.printed_cols[1] == parse_rat_or_throw("0.2814"));
  CHECK(t2.printed_cols[2] == parse_rat_or_throw("0.0903"));
  CHECK(t2.printed_cols[3] == parse_rat_or_throw("0.0524"));
  CHECK(t3.printed_total == parse_rat_or_throw("0.9993"));
  CHECK(t3.printed_cols[0] == parse_rat_or_throw("0.7277"));
  CHECK(t3.printed_cols[1] == parse_rat_or_throw("0.0027"));
  CHECK(t3.printed_cols[2] == parse_rat_or_throw("0.1216"));
  CHECK(t3.printed_cols[3] == parse_rat_or_throw("0.1472"));
}

TEST_CASE("row classification of sample curves") {
  const auto& [t2, t3] = shipped();

  auto r = classify_row(t2, {1, 1});  // unit coefficients at 2
  REQUIRE(r.has_value());
  CHECK(*r == 1);

  r = classify_row(t2, {1, 2});  // vA=0, vB=1, disc -1792 = -2^8*7
  REQUIRE(r.has_value());
  CHECK(*r == 15);

  r = classify_row(t3, {1, 1});
  REQUIRE(r.has_value());
  CHECK(*r == 1);

  r = classify_row(t3, {3, 2});  // vA=1, vB=0, 4*27+27*4 = 216 = 2^3*3^3
  REQUIRE(r.has_value());
  CHECK(*r == 15);

  // 4*61^3 + 27*4 = 908032 = 2^8 * 3547, so the full discriminant has
  // 2-valuation 12, just past the classified band; at 3 both coefficients
  // are units, which is plain good reduction.
  CHECK(!classify_row(t2, {61, 2}).has_value());
  r = classify_row(t3, {61, 2});
  REQUIRE(r.has_value());
  CHECK(*r == 1);

  CHECK_THROWS_AS(classify_row(t2, {-3, 2}), std::invalid_argument);
}

TEST_CASE("full verification of the shipped tables") {
  const auto& [t2, t3] = shipped();
  for (const auto* t : {&t2, &t3}) {
    auto report = verify_table_densities(*t);
    std::string joined;
    for (const auto& f : report.failures) joined += f + "\n";
    INFO("table p=" << t->p << "\n" << joined);
    CHECK(report.ok);
    CHECK(report.failures.empty());
    CHECK(!report.notes.empty());
  }
}

TEST_CASE("tampered tables are rejected") {
  const auto& [t2, t3] = shipped();

  DensityTable bad = t2;
  bad.rows[4].density += Rat(1, 4096);
  auto report = verify_table_densities(bad);
  CHECK(!report.ok);
  bool names_row = false;
  for (const auto& f : report.failures)
    if (f.find("row 5") != std::string::npos) names_row = true;
  CHECK(names_row);

  DensityTable bad3 = t3;
  bad3.rows[0].rel[0] = Rat(1, 2);  // relative masses no longer sum to 1
  report = verify_table_densities(bad3);
  CHECK(!report.ok);
}

TEST_CASE("parser rejects malformed input") {
  const std::string good = slurp(tables_path());

  CHECK_THROWS_AS(parse_density_tables("row 1 =0 =0 - 1/2 1 0 0 0\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_density_tables("[table p=5]\n"),
                  std::invalid_argument);

  // Wrong field count inside an otherwise valid file.
  std::string mangled = good;
  auto pos = mangled.find("row =");
  REQUIRE(pos != std::string::npos);
  mangled.insert(pos + 4, "extra ");
  CHECK_THROWS_AS(parse_density_tables(mangled), std::invalid_argument);

  // Bad condition token.
  mangled = good;
  pos = mangled.find("=0");
  REQUIRE(pos != std::string::npos);
  mangled[pos] = '~';
  CHECK_THROWS_AS(parse_density_tables(mangled), std::invalid_argument);

  // Drop the totals line of the first table.
  mangled = good;
  pos = mangled.find("\ntotal ");
  REQUIRE(pos != std::string::npos);
  mangled.replace(pos + 1, 5, "notal");
  CHECK_THROWS_AS(parse_density_tables(mangled), std::invalid_argument);
}

TEST_CASE("sign-pairing masses from the two tables") {
  const auto& [t2, t3] = shipped();
  auto [f1, f2] = density_F1_F2(t2, t3);
  CHECK(f1 == Rat(71495761, 120932352));
  CHECK(f2 == Rat(48711683, 120932352));
  CHECK(f1 + f2 == row_sum(t2) * row_sum(t3));

  auto [p1, p2] = density_F1_F2_printed(t2, t3);
  CHECK(p1 == parse_rat_or_throw("0.59100254"));
  CHECK(p2 == parse_rat_or_throw("0.40260194"));

  // Both variants clear the same working thresholds and sit within the
  // advertised distance of the quoted constants.
  for (const Rat& v1 : {f1, p1}) {
    CHECK(v1 >= parse_rat_or_throw("0.5910"));
    CHECK(abs_rat(v1 - parse_rat_or_throw("0.59179")) <
          parse_rat_or_throw("0.002"));
  }
  for (const Rat& v2 : {f2, p2}) {
    CHECK(v2 >= parse_rat_or_throw("0.4026"));
    CHECK(abs_rat(v2 - parse_rat_or_throw("0.4032")) <
          parse_rat_or_throw("0.002"));
  }
}
