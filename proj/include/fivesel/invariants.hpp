// (I, J) invariant pairs, their discriminant and height, and the map from
// a short Weierstrass curve y^2 = x^3 + Ax + B to its (I, J).
#pragma once

#include "fivesel/rational.hpp"

namespace fivesel {

struct IJPair {
  Rat I, J;

  // 27 * disc = 4 I^3 - J^2, exactly.
  Rat disc() const { return (4 * I * I * I - J * J) / 27; }
  // max(|I|^3, J^2/4)
  Rat height() const {
    Rat hi = abs_rat(I);
    hi = hi * hi * hi;
    Rat hj = J * J / 4;
    return hi > hj ? hi : hj;
  }

  bool operator==(const IJPair&) const = default;
};

// I = -3A, J = -27B. Then disc(I,J) = -(4A^3 + 27B^2), i.e. 1/16 of the
// standard curve discriminant -16(4A^3 + 27B^2); same sign, same vanishing.
IJPair curve_to_ij(const Int& A, const Int& B);

}  // namespace fivesel
