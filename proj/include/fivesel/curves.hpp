#pragma once

#include "fivesel/rational.hpp"

namespace fivesel {

// Integral short Weierstrass model y^2 = x^3 + Ax + B.
struct EllipticCurve {
  Int A;
  Int B;
};

// disc(E) = -16(4A^3 + 27B^2); zero exactly when the model is singular.
Int curve_disc(const EllipticCurve& e);

// p-adic valuation of a nonzero integer; throws on n = 0.
long valuation(const Int& n, long p);

// Reduce (A, B) so that no prime p has p^4 | A and p^6 | B; dividing such a
// pair by (p^4, p^6) leaves an isomorphic curve. Throws on (0, 0).
EllipticCurve minimalize(const Int& A, const Int& B);

enum class ReductionType { Good, Multiplicative, Additive };

struct ReductionData {
  long p = 0;
  ReductionType type = ReductionType::Good;
  long vDelta = 0;  // v_p of the discriminant
};

// Reduction behaviour of a nonsingular model at a prime p > 3: good when
// p does not divide the discriminant, additive when p divides both A and B,
// multiplicative otherwise. Throws for p <= 3 or composite p.
ReductionData reduction_type(const EllipticCurve& e, long p);

// Twist-comparison local sign at p > 3: -1 exactly when the reduction is
// multiplicative and p = 3 (mod 4); +1 otherwise.
int d_p(const EllipticCurve& e, long p);

// d_p adjusted by the parity of v_p(disc) when p = 3 (mod 4); +1 otherwise.
int alpha_p(const EllipticCurve& e, long p);

// Quadratic twist by -1: (A, B) -> (A, -B).
EllipticCurve twist_minus_one(const EllipticCurve& e);

// p-power part p^{v_p(disc)} of the discriminant, the signed complementary
// cofactor disc / p^{v_p(disc)}, and the cofactor with both 2 and 3 removed.
Int disc_p_part(const EllipticCurve& e, long p);
Int disc_prime_to(const EllipticCurve& e, long p);
Int disc_prime_to_6(const EllipticCurve& e);

}  // namespace fivesel
