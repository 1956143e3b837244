#include "fivesel/families.hpp"

#include <stdexcept>

#include "fivesel/localdensity.hpp"
#include "fivesel/primes.hpp"

namespace fivesel {

namespace {

constexpr int kScaleBits = 192;

// A running product maintained as a strict one-sided bound: the value is
// num / 2^kScaleBits, and every multiplication rounds the new numerator
// toward the chosen side, so the accumulated value never crosses the true
// product.
class DirectedProduct {
 public:
  explicit DirectedProduct(bool round_up)
      : num_(Int(1) << kScaleBits), up_(round_up) {}

  void multiply(const Rat& r) {
    Int t = num_ * r.get_num();
    if (up_)
      mpz_cdiv_q(num_.get_mpz_t(), t.get_mpz_t(), r.get_den().get_mpz_t());
    else
      mpz_fdiv_q(num_.get_mpz_t(), t.get_mpz_t(), r.get_den().get_mpz_t());
  }

  Rat value() const {
    Rat r(num_, Int(1) << kScaleBits);
    r.canonicalize();
    return r;
  }

 private:
  Int num_;
  bool up_;
};

Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Sums of cond2/cond1 ratios over the admissible condition-2 primes
// (3 mod 4, in [7, kCond2PrimeBound]). The ratio simplifies to
// p / (p^3 + p^2 + 1).
struct RatioSums {
  Rat S1{0}, S2{0};
  long count = 0;
};

RatioSums ratio_sums() {
  RatioSums out;
  for (long p : primes_up_to(kCond2PrimeBound)) {
    if (p <= 3 || p % 4 != 3) continue;
    const Int P(p);
    Rat ratio(P, P * P * P + P * P + 1);
    ratio.canonicalize();
    out.S1 += ratio;
    out.S2 += ratio * ratio;
    ++out.count;
  }
  return out;
}

Rat truncated_product(long prime_bound, bool round_up) {
  DirectedProduct prod(round_up);
  for (long p : primes_up_to(prime_bound)) {
    if (p <= 3 || p % 4 != 3) continue;
    prod.multiply(cond1_density(p));
  }
  return prod.value();
}

// Lower bound for the product of cond1 densities over primes p > bound with
// p = 3 (mod 4). Each factor is 1 - e_p with 0 < e_p < 1/p^2, so the
// product is at least 1 - sum(1/p^2). Those primes are integers > bound
// spaced at least 4 apart, giving sum(1/p^2) <= 1/bound^2 + 1/(4 bound).
Rat tail_floor_bound(long bound) {
  const Int B(bound);
  Rat deficit = Rat(1, B * B) + Rat(1, 4 * B);
  deficit.canonicalize();
  return 1 - deficit;
}

}  // namespace

FamilyBounds assemble_families(const Rat& f1, const Rat& f2, const Rat& f3,
                               const Rat& f4) {
  FamilyBounds out;
  out.F1 = f1;
  out.F2 = f2;
  out.F3 = f3;
  out.F4 = f4;
  out.Fplus = f1 * f4 + f2 * f3;
  out.Fminus = f1 * f3 + f2 * f4;
  out.Ftotal = make_rat(1, 5) * out.Fplus + make_rat(4, 5) * out.Fminus;
  return out;
}

namespace {

std::pair<Rat, Rat> pair_columns(const std::array<Rat, 4>& c2,
                                 const std::array<Rat, 4>& c3) {
  // Column order is (1,+1),(1,-1),(3,+1),(3,-1); the product of class and
  // sign is 1 mod 4 for the outer columns and 3 mod 4 for the inner ones.
  const Rat even2 = c2[0] + c2[3], odd2 = c2[1] + c2[2];
  const Rat even3 = c3[0] + c3[3], odd3 = c3[1] + c3[2];
  return {even2 * even3 + odd2 * odd3, even2 * odd3 + odd2 * even3};
}

}  // namespace

std::pair<Rat, Rat> density_F1_F2(const DensityTable& t2,
                                  const DensityTable& t3) {
  if (t2.p != 2 || t3.p != 3)
    throw std::invalid_argument("density_F1_F2: tables must be (p=2, p=3)");
  return pair_columns(column_totals(t2), column_totals(t3));
}

std::pair<Rat, Rat> density_F1_F2_printed(const DensityTable& t2,
                                          const DensityTable& t3) {
  if (t2.p != 2 || t3.p != 3)
    throw std::invalid_argument("density_F1_F2: tables must be (p=2, p=3)");
  return pair_columns(t2.printed_cols, t3.printed_cols);
}

EulerBounds density_F3_F4(long prime_bound) {
  if (prime_bound < kCond2PrimeBound)
    throw std::invalid_argument(
        "density_F3_F4: prime_bound must be at least 10^4");
  EulerBounds out;
  out.prime_bound = prime_bound;
  const RatioSums sums = ratio_sums();
  out.cond2_primes = sums.count;
  out.S1 = sums.S1;
  out.S2 = sums.S2;
  out.tail_floor = tail_floor_bound(prime_bound);

  const Rat product_lo = truncated_product(prime_bound, /*round_up=*/false);
  // Exactly two condition-2 primes: sum over unordered pairs of distinct
  // admissible primes of the ratio products, i.e. (S1^2 - S2) / 2.
  const Rat pair_mass = (sums.S1 * sums.S1 - sums.S2) / 2;
  out.F3_core = product_lo * (1 + pair_mass);
  out.F4_core = product_lo * sums.S1;
  out.F3_lower = out.F3_core * out.tail_floor;
  out.F4_lower = out.F4_core * out.tail_floor;
  return out;
}

Rat density_F3_upper(long prime_bound) {
  if (prime_bound < kCond2PrimeBound)
    throw std::invalid_argument(
        "density_F3_upper: prime_bound must be at least 10^4");
  const RatioSums sums = ratio_sums();
  const Rat pair_mass = (sums.S1 * sums.S1 - sums.S2) / 2;
  return truncated_product(prime_bound, /*round_up=*/true) * (1 + pair_mass);
}

}  // namespace fivesel
