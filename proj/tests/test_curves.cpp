#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fivesel/curves.hpp"
#include "fivesel/localdensity.hpp"
#include "fivesel/primes.hpp"

using namespace fivesel;

TEST_CASE("prime helpers") {
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(13) == std::vector<long>{2, 3, 5, 7, 11, 13});
  CHECK(primes_up_to(100).size() == 25);
  CHECK(is_prime(2));
  CHECK(is_prime(9973));
  CHECK(!is_prime(1));
  CHECK(!is_prime(9991));  // 97 * 103
}

TEST_CASE("discriminant and valuation") {
  CHECK(curve_disc({1, 1}) == -496);  // -16 * 31
  CHECK(curve_disc({0, 1}) == -432);
  CHECK(curve_disc({-3, 2}) == 0);  // singular: 4(-27) + 27(4) = 0
  CHECK(valuation(48, 2) == 4);
  CHECK(valuation(-54, 3) == 3);
  CHECK(valuation(7, 5) == 0);
  CHECK_THROWS_AS(valuation(0, 2), std::invalid_argument);
}

TEST_CASE("minimalize strips fourth/sixth power content") {
  auto m = minimalize(16, 64);
  CHECK(m.A == 1);
  CHECK(m.B == 1);

  m = minimalize(16, 1);
  CHECK(m.A == 16);
  CHECK(m.B == 1);

  m = minimalize(Int(81) * 16, Int(729) * 64);
  CHECK(m.A == 1);
  CHECK(m.B == 1);

  m = minimalize(0, 64);
  CHECK(m.A == 0);
  CHECK(m.B == 1);

  m = minimalize(16, 0);
  CHECK(m.A == 1);
  CHECK(m.B == 0);

  m = minimalize(-32, 128);  // 2^4 | 32 but 2^6 does not divide 128 twice
  CHECK(m.A == -2);
  CHECK(m.B == 2);

  CHECK_THROWS_AS(minimalize(0, 0), std::invalid_argument);
}

TEST_CASE("reduction types at p > 3") {
  auto rd = reduction_type({0, 1}, 5);
  CHECK(rd.type == ReductionType::Good);
  CHECK(rd.vDelta == 0);

  rd = reduction_type({2, 3}, 11);  // 4*8 + 27*9 = 275 = 5^2 * 11
  CHECK(rd.type == ReductionType::Multiplicative);
  CHECK(rd.vDelta == 1);

  rd = reduction_type({5, 5}, 5);  // 1175 = 47 * 25
  CHECK(rd.type == ReductionType::Additive);
  CHECK(rd.vDelta == 2);

  CHECK_THROWS_AS(reduction_type({1, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(reduction_type({1, 1}, 9), std::invalid_argument);
  CHECK_THROWS_AS(reduction_type({-3, 2}, 5), std::invalid_argument);
}

TEST_CASE("local signs") {
  CHECK(d_p({2, 3}, 11) == -1);  // multiplicative, 11 = 3 mod 4
  CHECK(d_p({3, 1}, 5) == 1);    // multiplicative at 5 = 1 mod 4
  CHECK(d_p({0, 1}, 7) == 1);    // good

  CHECK(alpha_p({2, 3}, 11) == 1);  // d = -1, v = 1
  CHECK(alpha_p({0, 1}, 7) == 1);   // good at 7 = 3 mod 4
  CHECK(alpha_p({2, 3}, 5) == 1);   // 5 = 1 mod 4, always +1

  // Find a multiplicative v = 2 pair at p = 7 and check the sign flips.
  bool found = false;
  for (long a = 1; a < 50 && !found; ++a)
    for (long b = 1; b < 50 && !found; ++b) {
      EllipticCurve e{a, b};
      if (curve_disc(e) == 0) continue;
      auto rd = reduction_type(e, 7);
      if (rd.type == ReductionType::Multiplicative && rd.vDelta == 2) {
        CHECK(alpha_p(e, 7) == -1);
        found = true;
      }
    }
  CHECK(found);
}

TEST_CASE("alpha agrees with its defining sign identity") {
  std::mt19937_64 rng(321);
  std::uniform_int_distribution<long> coeff(-40, 40);
  const long ps[] = {5, 7, 11, 19, 23};
  int tried = 0;
  while (tried < 300) {
    EllipticCurve e{coeff(rng), coeff(rng)};
    if (curve_disc(e) == 0) continue;
    ++tried;
    for (long p : ps) {
      auto rd = reduction_type(e, p);
      const int expected =
          p % 4 == 3 ? d_p(e, p) * (rd.vDelta % 2 == 0 ? 1 : -1) : 1;
      REQUIRE(alpha_p(e, p) == expected);
    }
  }
}

TEST_CASE("twist by -1 preserves local reduction data") {
  std::mt19937_64 rng(654);
  std::uniform_int_distribution<long> coeff(-60, 60);
  const long ps[] = {5, 7, 11, 19};
  int tried = 0;
  while (tried < 200) {
    EllipticCurve e{coeff(rng), coeff(rng)};
    if (curve_disc(e) == 0) continue;
    EllipticCurve t = twist_minus_one(e);
    if (curve_disc(t) == 0) continue;
    ++tried;
    for (long p : ps) {
      auto re = reduction_type(e, p);
      auto rt = reduction_type(t, p);
      REQUIRE(re.type == rt.type);
      REQUIRE(re.vDelta == rt.vDelta);
      REQUIRE(d_p(e, p) == d_p(t, p));
      REQUIRE(alpha_p(e, p) == alpha_p(t, p));
    }
  }
}

TEST_CASE("discriminant part accessors") {
  EllipticCurve e{1, 2};  // disc = -16 * 112 = -2^8 * 7
  CHECK(disc_p_part(e, 2) == 256);
  CHECK(disc_prime_to(e, 2) == -7);
  CHECK(disc_prime_to_6(e) == -7);

  EllipticCurve f{1, 1};  // disc = -496 = -2^4 * 31
  CHECK(disc_p_part(f, 2) == 16);
  CHECK(disc_p_part(f, 3) == 1);
  CHECK(disc_prime_to_6(f) == -31);
}

TEST_CASE("local density closed forms") {
  CHECK(local_density(7, LocalEvent::Good) == Rat(6, 7));
  CHECK(local_density(7, LocalEvent::Mult1) ==
        (Rat(1, 7) - Rat(1, 49)) * Rat(6, 7));
  CHECK(local_density(5, LocalEvent::Add2) == Rat(1, 25) * Rat(4, 5));

  for (long p : {5L, 7L, 11L, 19L}) {
    const Rat mult_total = Rat(1, p) - Rat(1, p * p);
    const Rat add_total = Rat(1, p * p);
    CHECK(local_density(p, LocalEvent::Mult1) +
              local_density(p, LocalEvent::Mult2) +
              local_density(p, LocalEvent::Mult3) <
          mult_total);
    CHECK(local_density(p, LocalEvent::Add2) +
              local_density(p, LocalEvent::Add3) +
              local_density(p, LocalEvent::Add4) <
          add_total);

    // The sign-preserving and sign-flipping events cover everything except
    // mass 1/p^4 (deep multiplicative/additive valuations).
    CHECK(cond1_density(p) ==
          local_density(p, LocalEvent::Good) +
              local_density(p, LocalEvent::Mult1) +
              local_density(p, LocalEvent::Mult3) +
              local_density(p, LocalEvent::Add2) +
              local_density(p, LocalEvent::Add4));
    CHECK(cond2_density(p) == local_density(p, LocalEvent::Mult2) +
                                  local_density(p, LocalEvent::Add3));
    Rat gap(1);
    gap /= Rat(p * p);
    gap /= Rat(p * p);
    CHECK(cond1_density(p) + cond2_density(p) == 1 - gap);
  }

  CHECK_THROWS_AS(local_density(3, LocalEvent::Good), std::invalid_argument);
  CHECK_THROWS_AS(local_density(9, LocalEvent::Good), std::invalid_argument);
}

TEST_CASE("enumeration mod p^3 reproduces the closed forms") {
  for (long p : {5L, 7L, 11L}) {
    auto counts = enumerate_reduction(p, 3);
    long long classes = 1;
    for (int i = 0; i < 6; ++i) classes *= p;

    long long total = 0;
    for (const auto& [key, n] : counts) total += n;
    REQUIRE(total == classes);

    const auto density = [&](ReductionType t, long v) {
      auto it = counts.find({t, v});
      const long n = it == counts.end() ? 0 : static_cast<long>(it->second);
      Rat r(Int(n), Int(static_cast<long>(classes)));
      r.canonicalize();
      return r;
    };
    CHECK(density(ReductionType::Good, 0) == local_density(p, LocalEvent::Good));
    CHECK(density(ReductionType::Multiplicative, 1) ==
          local_density(p, LocalEvent::Mult1));
    CHECK(density(ReductionType::Multiplicative, 2) ==
          local_density(p, LocalEvent::Mult2));
    CHECK(density(ReductionType::Additive, 2) ==
          local_density(p, LocalEvent::Add2));
  }
}

TEST_CASE("enumeration mod 5^5 reaches the deeper valuations") {
  auto counts = enumerate_reduction(5, 5);
  const long long classes = 9765625;  // 5^10

  const auto density = [&](ReductionType t, long v) {
    auto it = counts.find({t, v});
    const long n = it == counts.end() ? 0 : static_cast<long>(it->second);
    Rat r(Int(n), Int(static_cast<long>(classes)));
    r.canonicalize();
    return r;
  };
  CHECK(density(ReductionType::Multiplicative, 3) ==
        local_density(5, LocalEvent::Mult3));
  CHECK(density(ReductionType::Additive, 3) ==
        local_density(5, LocalEvent::Add3));
  CHECK(density(ReductionType::Additive, 4) ==
        local_density(5, LocalEvent::Add4));
}
