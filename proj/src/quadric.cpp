#include "fivesel/quadric.hpp"

#include <stdexcept>

namespace fivesel {

QuadricForm::QuadricForm(Mat g) : gram(std::move(g)) {
  if (gram.size() != 5) throw std::invalid_argument("QuadricForm: not 5x5");
  for (int i = 0; i < 5; ++i) {
    if (gram[i].size() != 5) throw std::invalid_argument("QuadricForm: not 5x5");
    for (int j = i + 1; j < 5; ++j)
      if (gram[i][j] != gram[j][i])
        throw std::invalid_argument("QuadricForm: gram not symmetric");
  }
}

bool QuadricForm::is_zero() const {
  for (const auto& row : gram)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

QuadricForm product_form(const LinearForm& u, const LinearForm& v) {
  QuadricForm q;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) q.gram[i][j] = (u[i] * v[j] + u[j] * v[i]) / 2;
  return q;
}

QuadricForm qf_add(const QuadricForm& a, const QuadricForm& b) {
  QuadricForm q;
  q.gram = mat_add(a.gram, b.gram);
  return q;
}

QuadricForm qf_sub(const QuadricForm& a, const QuadricForm& b) {
  return qf_add(a, qf_neg(b));
}

QuadricForm qf_neg(const QuadricForm& a) { return qf_scale(Rat(-1), a); }

QuadricForm qf_scale(const Rat& c, const QuadricForm& a) {
  QuadricForm q;
  q.gram = scalar_mul(c, a.gram);
  return q;
}

Rat evaluate(const LinearForm& f, const std::array<Rat, 5>& t) {
  Rat s = 0;
  for (int i = 0; i < 5; ++i) s += f[i] * t[i];
  return s;
}

Rat evaluate(const QuadricForm& q, const std::array<Rat, 5>& t) {
  Rat s = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) s += q.gram[i][j] * t[i] * t[j];
  return s;
}

}  // namespace fivesel
