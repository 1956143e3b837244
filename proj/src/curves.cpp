#include "fivesel/curves.hpp"

#include <stdexcept>

#include "fivesel/primes.hpp"

namespace fivesel {

Int curve_disc(const EllipticCurve& e) {
  return -16 * (4 * e.A * e.A * e.A + 27 * e.B * e.B);
}

long valuation(const Int& n, long p) {
  if (n == 0) throw std::invalid_argument("valuation: zero has no finite valuation");
  if (p < 2) throw std::invalid_argument("valuation: modulus must be at least 2");
  Int reduced;
  const Int pz(p);
  return static_cast<long>(
      mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

EllipticCurve minimalize(const Int& A, const Int& B) {
  if (A == 0 && B == 0)
    throw std::invalid_argument("minimalize: (0, 0) defines no curve");
  EllipticCurve e{A, B};
  // Any prime with p^4 | A and p^6 | B satisfies p <= |A|^{1/4} (when A != 0)
  // and p <= |B|^{1/6} (when B != 0), so candidates can be enumerated in
  // increasing order; smaller factors are stripped completely before larger
  // ones, hence composite trial divisors never divide cleanly.
  Int bound = 0;
  if (e.A != 0) bound = iroot(abs_int(e.A), 4);
  if (e.B != 0) {
    Int b6 = iroot(abs_int(e.B), 6);
    if (e.A == 0 || b6 < bound) bound = b6;
  }
  for (Int d = 2; d <= bound; ++d) {
    const Int d4 = pow_int(d, 4);
    const Int d6 = pow_int(d, 6);
    while ((e.A == 0 || mpz_divisible_p(e.A.get_mpz_t(), d4.get_mpz_t())) &&
           (e.B == 0 || mpz_divisible_p(e.B.get_mpz_t(), d6.get_mpz_t()))) {
      if (e.A != 0) e.A /= d4;
      if (e.B != 0) e.B /= d6;
      if (e.A == 0 && e.B == 0) return e;  // unreachable for valid input
    }
  }
  return e;
}

namespace {

bool divides(long p, const Int& n) {
  return mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

void require_large_prime(long p) {
  if (p <= 3 || !is_prime(p))
    throw std::invalid_argument("reduction data requires a prime greater than 3");
}

}  // namespace

ReductionData reduction_type(const EllipticCurve& e, long p) {
  require_large_prime(p);
  const Int d = 4 * e.A * e.A * e.A + 27 * e.B * e.B;
  if (d == 0) throw std::invalid_argument("reduction_type: singular model");
  // p is odd and > 3, so the factor -16 contributes nothing to v_p.
  const long v = valuation(d, p);
  ReductionData out;
  out.p = p;
  out.vDelta = v;
  if (v == 0)
    out.type = ReductionType::Good;
  else if (divides(p, e.A) && divides(p, e.B))
    out.type = ReductionType::Additive;
  else
    out.type = ReductionType::Multiplicative;
  return out;
}

int d_p(const EllipticCurve& e, long p) {
  const ReductionData rd = reduction_type(e, p);
  return (rd.type == ReductionType::Multiplicative && p % 4 == 3) ? -1 : 1;
}

int alpha_p(const EllipticCurve& e, long p) {
  const ReductionData rd = reduction_type(e, p);
  if (p % 4 != 3) return 1;
  const int sign = (rd.type == ReductionType::Multiplicative) ? -1 : 1;
  return (rd.vDelta % 2 == 0) ? sign : -sign;
}

EllipticCurve twist_minus_one(const EllipticCurve& e) { return {e.A, -e.B}; }

Int disc_p_part(const EllipticCurve& e, long p) {
  const Int d = curve_disc(e);
  if (d == 0) throw std::invalid_argument("disc_p_part: singular model");
  return pow_int(Int(p), valuation(d, p));
}

Int disc_prime_to(const EllipticCurve& e, long p) {
  const Int d = curve_disc(e);
  if (d == 0) throw std::invalid_argument("disc_prime_to: singular model");
  return d / disc_p_part(e, p);
}

Int disc_prime_to_6(const EllipticCurve& e) {
  const Int d = curve_disc(e);
  if (d == 0) throw std::invalid_argument("disc_prime_to_6: singular model");
  return d / (disc_p_part(e, 2) * disc_p_part(e, 3));
}

}  // namespace fivesel
