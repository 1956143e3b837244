#include "fivesel/linalg.hpp"

#include <stdexcept>

namespace fivesel {

Mat zero_mat(int rows, int cols) {
  return Mat(rows, std::vector<Rat>(cols, Rat(0)));
}

Mat identity_mat(int n) {
  Mat m = zero_mat(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  int n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  if (!a.empty() && static_cast<int>(a[0].size()) != k)
    throw std::invalid_argument("mat_mul: shape mismatch");
  Mat c = zero_mat(n, p);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (int j = 0; j < p; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

Mat mat_add(const Mat& a, const Mat& b) {
  Mat c = a;
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < c[i].size(); ++j) c[i][j] += b[i][j];
  return c;
}

Mat scalar_mul(const Rat& c, const Mat& a) {
  Mat r = a;
  for (auto& row : r)
    for (auto& x : row) x *= c;
  return r;
}

Mat transpose(const Mat& a) {
  int n = a.size(), m = a.empty() ? 0 : a[0].size();
  Mat t = zero_mat(m, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) t[j][i] = a[i][j];
  return t;
}

bool mat_equal(const Mat& a, const Mat& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Rat det(Mat m) {
  int n = m.size();
  Rat d = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      d = -d;
    }
    d *= m[col][col];
    Rat inv = 1 / m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] * inv;
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return d;
}

}  // namespace fivesel
