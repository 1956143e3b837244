// Skew-symmetric matrices with strict-upper storage, and the exact Pfaffian.
#pragma once

#include <vector>

#include "fivesel/linalg.hpp"
#include "fivesel/rational.hpp"

namespace fivesel {

struct SkewMatrix {
  int dim = 0;
  std::vector<Rat> upper;  // row-major strict upper triangle, size dim*(dim-1)/2

  static SkewMatrix zero(int dim);

  // 0-based signed entry; diagonal is 0.
  const Rat& upper_at(int i, int j) const;  // requires i < j
  Rat& upper_at(int i, int j);              // requires i < j
  Rat entry(int i, int j) const;

  bool operator==(const SkewMatrix&) const = default;
};

// Pfaffian by expansion along the first row; dim must be even.
// pfaffian(M)^2 = det(M).
Rat pfaffian(const SkewMatrix& m);

Mat to_dense(const SkewMatrix& m);
// Extracts the strict upper triangle; throws if m is not skew-symmetric.
SkewMatrix from_dense(const Mat& m);

SkewMatrix skew_add(const SkewMatrix& a, const SkewMatrix& b);
SkewMatrix skew_scale(const Rat& c, const SkewMatrix& a);
// g * m * g^t (g need not be invertible; the result is always skew).
SkewMatrix conjugate(const Mat& g, const SkewMatrix& m);

}  // namespace fivesel
