// Linear and quadratic forms in t1..t5 over the rationals.
// A quadratic form is carried by its symmetric Gram matrix, Q(t) = t^T G t,
// so the coefficient of t_i t_j (i != j) is twice the off-diagonal entry.
#pragma once

#include <array>

#include "fivesel/linalg.hpp"
#include "fivesel/rational.hpp"

namespace fivesel {

using LinearForm = std::array<Rat, 5>;  // coefficients of t1..t5

struct QuadricForm {
  Mat gram;  // 5x5 symmetric

  QuadricForm() : gram(zero_mat(5, 5)) {}
  explicit QuadricForm(Mat g);  // validates symmetry

  bool is_zero() const;
  bool operator==(const QuadricForm& o) const { return mat_equal(gram, o.gram); }
};

// (u . t)(v . t) as a quadratic form: G = (u v^T + v u^T) / 2.
QuadricForm product_form(const LinearForm& u, const LinearForm& v);

QuadricForm qf_add(const QuadricForm& a, const QuadricForm& b);
QuadricForm qf_sub(const QuadricForm& a, const QuadricForm& b);
QuadricForm qf_neg(const QuadricForm& a);
QuadricForm qf_scale(const Rat& c, const QuadricForm& a);

Rat evaluate(const LinearForm& f, const std::array<Rat, 5>& t);
Rat evaluate(const QuadricForm& q, const std::array<Rat, 5>& t);

inline bool is_zero(const LinearForm& f) {
  for (const auto& c : f)
    if (c != 0) return false;
  return true;
}

}  // namespace fivesel
