#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fivesel/latticecount.hpp"

using namespace fivesel;

TEST_CASE("pair counts match closed forms at small heights") {
  CHECK(count_ij(Int(100), DiscSign::Positive) == 66);  // 3 + 11 + 21 + 31
  CHECK(count_ij(Int(100), DiscSign::Negative) == 280);
  // Sign-zero pairs below height 100: (0,0), (1,+-2), (4,+-16).
  CHECK(count_ij(Int(100), DiscSign::Zero) == 5);
  CHECK(count_ij_box(Int(100)) == 351);

  CHECK(count_ij(Int(1), DiscSign::Positive) == 0);
  const auto one = count_ij_total(Int(1));
  // Height < 1 box holds (0,0) and (0,+-1); the latter two have negative
  // 4I^3 - J^2, so the split is (0, 2, 1).
  CHECK(one.plus == 0);
  CHECK(one.minus == 2);
  CHECK(one.zero == 1);
  CHECK(one.total() == count_ij_box(Int(1)));

  CHECK_THROWS_AS(count_ij(Int(0), DiscSign::Positive),
                  std::invalid_argument);
}

TEST_CASE("closed-form ranges agree with a two-dimensional scan") {
  for (long x = 1; x <= 300; ++x) {
    const Int X(x);
    for (DiscSign s :
         {DiscSign::Positive, DiscSign::Negative, DiscSign::Zero}) {
      REQUIRE(count_ij(X, s) == count_ij_brute(X, s));
    }
  }
}

TEST_CASE("the three signs partition the height box") {
  for (long x : {1L, 7L, 100L, 4096L, 10000L}) {
    const Int X(x);
    const auto c = count_ij_total(X);
    CHECK(c.total() == count_ij_box(X));
  }
  // At X = 10^4 confirm the partition against the scan as well.
  const auto c = count_ij_total(Int(10000));
  CHECK(c.plus == count_ij_brute(Int(10000), DiscSign::Positive));
  CHECK(c.minus == count_ij_brute(Int(10000), DiscSign::Negative));
  CHECK(c.zero == count_ij_brute(Int(10000), DiscSign::Zero));
}

TEST_CASE("counts are non-decreasing in the height bound") {
  Int prev_p = 0, prev_m = 0;
  for (long x = 1; x <= 2000; x += 97) {
    const Int X(x);
    const Int p = count_ij(X, DiscSign::Positive);
    const Int m = count_ij(X, DiscSign::Negative);
    CHECK(p >= prev_p);
    CHECK(m >= prev_m);
    prev_p = p;
    prev_m = m;
  }
}

TEST_CASE("decade counts are pinned") {
  const struct {
    unsigned long k;
    const char* plus;
    const char* minus;
    long zero;
  } rows[] = {
      {4, "3425", "13723", 9},
      {6, "158007", "637775", 19},
      {8, "7440216", "29718812", 43},
      {10, "344735782", "1378859816", 93},
      {12, "15998000527", "63997979275", 199},
  };
  for (const auto& row : rows) {
    const Int X = pow_int(10, row.k);
    CHECK(count_ij(X, DiscSign::Positive) == Int(row.plus));
    CHECK(count_ij(X, DiscSign::Negative) == Int(row.minus));
    CHECK(count_ij(X, DiscSign::Zero) == row.zero);
  }
  // |N(10^6) - (8/5) 10^5| = |158007 - 160000| stays within 5 * 10^3.
  CHECK(abs_int(Int("158007") - 160000) <= 5000);
}

TEST_CASE("envelope certificates hold across nine decades") {
  for (unsigned long k = 4; k <= 12; ++k) {
    const Int X = pow_int(10, k);
    for (DiscSign s : {DiscSign::Positive, DiscSign::Negative}) {
      const auto rep = check_envelope(X, s);
      INFO("X = 10^", k);
      CHECK(rep.upper_ok);
      CHECK(rep.lower_ok);
      CHECK(rep.ok());
      CHECK(rep.s == isqrt(X));
      CHECK(pow_int(rep.r, 6) <= pow_int(X, 5));
      CHECK(pow_int(rep.r + 1, 6) > pow_int(X, 5));
    }
  }
  CHECK_THROWS_AS(check_envelope(Int(10000), DiscSign::Zero),
                  std::invalid_argument);
}

TEST_CASE("fitted growth exponent is five sixths within one percent") {
  const double lo = 5.0 / 6.0 - 0.01;
  const double hi = 5.0 / 6.0 + 0.01;
  for (DiscSign s : {DiscSign::Positive, DiscSign::Negative}) {
    const double e = fitted_exponent(s);
    CHECK(e >= lo);
    CHECK(e <= hi);
  }
  CHECK_THROWS_AS(fitted_exponent(DiscSign::Zero), std::invalid_argument);
}

TEST_CASE("count versus volume rows match closed forms") {
  const auto cube = davenport_demo(RegionKind::Cube, 10);
  CHECK(cube.count == 1331);
  CHECK(cube.volume == 1000);
  CHECK(cube.diff == 331);
  CHECK(cube.projection == 100);
  CHECK(cube.ratio == Rat(331, 100));

  const auto simplex = davenport_demo(RegionKind::Simplex, 100);
  CHECK(simplex.count == 5151);  // (t+1)(t+2)/2
  CHECK(simplex.volume == 5000);
  CHECK(simplex.diff == 151);    // (3t+2)/2
  CHECK(simplex.projection == 100);
  CHECK(simplex.ratio == Rat(151, 100));
  CHECK(simplex.ratio <= 2);

  const auto disk = davenport_demo(RegionKind::Disk, 50);
  // Cross-check the disk count by scanning the square.
  Int brute = 0;
  for (long x = -50; x <= 50; ++x)
    for (long y = -50; y <= 50; ++y)
      if (Int(x) * x + Int(y) * y <= 2500) ++brute;
  CHECK(disk.count == brute);
  CHECK(disk.projection == 100);
  CHECK(disk.ratio <= 2);
  // |7845 - pi * 2500| is about 8.98; well under the perimeter scale.
  CHECK(disk.diff > 8);
  CHECK(disk.diff < 9);

  CHECK_THROWS_AS(davenport_demo(RegionKind::Cube, 0), std::invalid_argument);
}

TEST_CASE("ratio stays under the region ceiling on the geometric grid") {
  for (RegionKind kind :
       {RegionKind::Cube, RegionKind::Disk, RegionKind::Simplex}) {
    const auto rep = davenport_grid(kind);
    CHECK(rep.ok);
    CHECK(rep.rows.size() == 5);
    CHECK(rep.rows.front().t == 10);
    CHECK(rep.rows.back().t == 160);
    for (const auto& row : rep.rows) CHECK(row.ratio <= rep.bound);
    CHECK(rep.bound == (kind == RegionKind::Cube ? 4 : 2));
  }
}
