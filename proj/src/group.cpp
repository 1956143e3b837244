#include "fivesel/group.hpp"

#include <stdexcept>

namespace fivesel {

GroupElement::GroupElement(Mat g1_in, Mat g2_in)
    : g1(std::move(g1_in)), g2(std::move(g2_in)) {
  if (g1.size() != 5 || g2.size() != 5)
    throw std::invalid_argument("GroupElement: matrices must be 5x5");
  Rat d1 = det(g1), d2 = det(g2);
  if (d1 * d1 * d2 != 1)
    throw std::invalid_argument("GroupElement: det(g1)^2 det(g2) != 1");
}

GroupElement GroupElement::identity() {
  return GroupElement(identity_mat(5), identity_mat(5));
}

GroupElement GroupElement::center(const Rat& k) {
  if (k == 0) throw std::invalid_argument("center: k must be nonzero");
  return GroupElement(scalar_mul(k, identity_mat(5)),
                      scalar_mul(1 / (k * k), identity_mat(5)));
}

GroupElement group_mul(const GroupElement& g, const GroupElement& h) {
  return GroupElement(mat_mul(g.g1, h.g1), mat_mul(g.g2, h.g2));
}

Quintuple act(const GroupElement& g, const Quintuple& v) {
  std::array<SkewMatrix, 5> conj;
  for (int k = 0; k < 5; ++k) conj[k] = conjugate(g.g1, v.comp[k]);
  Quintuple out;
  for (int l = 0; l < 5; ++l) {
    SkewMatrix m = SkewMatrix::zero(5);
    for (int k = 0; k < 5; ++k) {
      if (g.g2[l][k] == 0) continue;
      m = skew_add(m, skew_scale(g.g2[l][k], conj[k]));
    }
    out.comp[l] = m;
  }
  return out;
}

bool equal_mod_center(const GroupElement& a, const GroupElement& b) {
  // b == (k a.g1, k^-2 a.g2) for some k != 0
  Rat k = 0;
  for (int i = 0; i < 5 && k == 0; ++i)
    for (int j = 0; j < 5 && k == 0; ++j)
      if (a.g1[i][j] != 0) k = b.g1[i][j] / a.g1[i][j];
  if (k == 0) return false;
  return mat_equal(b.g1, scalar_mul(k, a.g1)) &&
         mat_equal(b.g2, scalar_mul(1 / (k * k), a.g2));
}

}  // namespace fivesel
