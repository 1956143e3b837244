#include "fivesel/skew.hpp"

#include <stdexcept>

namespace fivesel {

namespace {

int upper_index(int dim, int i, int j) {
  // row-major strict upper triangle, i < j
  return i * (2 * dim - i - 1) / 2 + (j - i - 1);
}

// Pfaffian over the active index set, expanding along its first index.
Rat pfaffian_rec(const SkewMatrix& m, std::vector<int>& idx) {
  if (idx.empty()) return 1;
  Rat sum = 0;
  int p = idx[0];
  std::vector<int> rest(idx.begin() + 1, idx.end());
  for (size_t k = 0; k < rest.size(); ++k) {
    Rat a = m.entry(p, rest[k]);
    if (a == 0) continue;
    std::vector<int> sub;
    sub.reserve(rest.size() - 1);
    for (size_t l = 0; l < rest.size(); ++l)
      if (l != k) sub.push_back(rest[l]);
    Rat term = a * pfaffian_rec(m, sub);
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

}  // namespace

SkewMatrix SkewMatrix::zero(int dim) {
  SkewMatrix m;
  m.dim = dim;
  m.upper.assign(dim * (dim - 1) / 2, Rat(0));
  return m;
}

const Rat& SkewMatrix::upper_at(int i, int j) const {
  return upper[upper_index(dim, i, j)];
}

Rat& SkewMatrix::upper_at(int i, int j) { return upper[upper_index(dim, i, j)]; }

Rat SkewMatrix::entry(int i, int j) const {
  if (i == j) return 0;
  if (i < j) return upper_at(i, j);
  return -upper_at(j, i);
}

Rat pfaffian(const SkewMatrix& m) {
  if (m.dim % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
  std::vector<int> idx(m.dim);
  for (int i = 0; i < m.dim; ++i) idx[i] = i;
  return pfaffian_rec(m, idx);
}

Mat to_dense(const SkewMatrix& m) {
  Mat d = zero_mat(m.dim, m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) d[i][j] = m.entry(i, j);
  return d;
}

SkewMatrix from_dense(const Mat& d) {
  int n = d.size();
  SkewMatrix m = SkewMatrix::zero(n);
  for (int i = 0; i < n; ++i) {
    if (d[i][i] != 0) throw std::invalid_argument("from_dense: nonzero diagonal");
    for (int j = i + 1; j < n; ++j) {
      if (d[i][j] != -d[j][i]) throw std::invalid_argument("from_dense: not skew");
      m.upper_at(i, j) = d[i][j];
    }
  }
  return m;
}

SkewMatrix skew_add(const SkewMatrix& a, const SkewMatrix& b) {
  SkewMatrix r = a;
  for (size_t k = 0; k < r.upper.size(); ++k) r.upper[k] += b.upper[k];
  return r;
}

SkewMatrix skew_scale(const Rat& c, const SkewMatrix& a) {
  SkewMatrix r = a;
  for (auto& x : r.upper) x *= c;
  return r;
}

SkewMatrix conjugate(const Mat& g, const SkewMatrix& m) {
  return from_dense(mat_mul(mat_mul(g, to_dense(m)), transpose(g)));
}

}  // namespace fivesel
