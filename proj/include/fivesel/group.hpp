// The symmetry group: pairs (g1, g2) of 5x5 rational matrices with
// det(g1)^2 det(g2) = 1, acting by (A,...,E) -> (g1 A g1^t, ...) recombined
// by g2. Equality is taken modulo the central torus {(k I5, k^-2 I5)}.
#pragma once

#include "fivesel/linalg.hpp"
#include "fivesel/quintuple.hpp"

namespace fivesel {

struct GroupElement {
  Mat g1, g2;

  // Validates shapes and the determinant constraint; throws on violation.
  GroupElement(Mat g1_in, Mat g2_in);

  static GroupElement identity();
  // The central element (k I5, k^-2 I5), k != 0.
  static GroupElement center(const Rat& k);
};

// Composition: act(group_mul(g,h), v) == act(g, act(h, v)).
GroupElement group_mul(const GroupElement& g, const GroupElement& h);

// M'_l = sum_k (g2)_{lk} * g1 M_k g1^t.
Quintuple act(const GroupElement& g, const Quintuple& v);

bool equal_mod_center(const GroupElement& a, const GroupElement& b);

}  // namespace fivesel
