// Small dense exact-rational matrices: just enough linear algebra for 5x5 work.
#pragma once

#include <vector>

#include "fivesel/rational.hpp"

namespace fivesel {

using Mat = std::vector<std::vector<Rat>>;

Mat zero_mat(int rows, int cols);
Mat identity_mat(int n);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat scalar_mul(const Rat& c, const Mat& a);
Mat transpose(const Mat& a);
bool mat_equal(const Mat& a, const Mat& b);

// Exact determinant by Gaussian elimination (takes a working copy).
Rat det(Mat m);

}  // namespace fivesel
