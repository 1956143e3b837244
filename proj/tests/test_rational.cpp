#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fivesel/rational.hpp"

using namespace fivesel;

TEST_CASE("decimal literals parse exactly") {
  CHECK(parse_rat("4.12") == Rat(103, 25));
  CHECK(parse_rat("0.1") == Rat(1, 10));
  CHECK(parse_rat(".25") == Rat(1, 4));
  CHECK(parse_rat("-0.04") == Rat(-1, 25));
  CHECK(parse_rat("3.9") == Rat(39, 10));
  CHECK(parse_rat("7") == Rat(7));
  CHECK(parse_rat("-3/4") == Rat(-3, 4));
  CHECK(parse_rat("6/8") == Rat(3, 4));
  CHECK(parse_rat("+2.") == Rat(2));
}

TEST_CASE("malformed input is rejected") {
  CHECK(!parse_rat(""));
  CHECK(!parse_rat("-"));
  CHECK(!parse_rat("."));
  CHECK(!parse_rat("1.2.3"));
  CHECK(!parse_rat("1/0"));
  CHECK(!parse_rat("a35"));
  CHECK(!parse_rat("1e3"));
  CHECK_THROWS(parse_rat_or_throw("x"));
}

TEST_CASE("formatting round-trips and rounds correctly") {
  CHECK(fraction_string(Rat(103, 25)) == "103/25");
  CHECK(fraction_string(Rat(-7)) == "-7");
  CHECK(decimal_string(Rat(103, 25)) == "4.120000");
  CHECK(decimal_string(Rat(1, 3)) == "0.333333");
  CHECK(decimal_string(Rat(2, 3)) == "0.666667");
  CHECK(decimal_string(Rat(-1, 2), 0) == "-1");   // half away from zero
  CHECK(decimal_string(Rat(1, 2), 0) == "1");
  CHECK(decimal_string(Rat(0), 3) == "0.000");
  CHECK(decimal_string(Rat(-1, 8), 2) == "-0.13");
  CHECK(decimal_string(Rat(99999, 100000), 4) == "1.0000");
}

TEST_CASE("integer helpers") {
  CHECK(pow_int(5, 40) == Int("9094947017729282379150390625"));
  CHECK(pow_rat(Rat(2, 3), -2) == Rat(9, 4));
  CHECK(isqrt(Int(399)) == 19);
  CHECK(isqrt(Int(400)) == 20);
  CHECK(icbrt(Int(999)) == 9);
  CHECK(iroot(Int(1000000000000), 6) == 100);
  Int big = pow_int(10, 24) - 1;
  CHECK(iroot(big, 6) == 9999);
}
