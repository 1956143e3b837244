#include "fivesel/weights.hpp"

namespace fivesel {

namespace {

constexpr int kTorusRows[5][4] = {
    {-4, -3, -2, -1}, {1, -3, -2, -1}, {1, 2, -2, -1}, {1, 2, 3, -1}, {1, 2, 3, 4}};

}  // namespace

WeightVector weight(int symbol) {
  auto [i, j] = symbol_pair(symbol);
  int letter = symbol_letter(symbol);
  WeightVector w;
  for (int k = 0; k < 4; ++k) {
    w[k] = kTorusRows[i - 1][k] + kTorusRows[j - 1][k];
    w[4 + k] = kTorusRows[letter][k];
  }
  return w;
}

WeightVector weight(const Monomial& m) {
  WeightVector w{};
  for (const auto& [sym, exp] : m) {
    WeightVector wu = weight(sym);
    for (int k = 0; k < 8; ++k) w[k] += exp * wu[k];
  }
  return w;
}

WeightVector wv_add(const WeightVector& a, const WeightVector& b) {
  WeightVector c;
  for (int k = 0; k < 8; ++k) c[k] = a[k] + b[k];
  return c;
}

WeightVector wv_sub(const WeightVector& a, const WeightVector& b) {
  WeightVector c;
  for (int k = 0; k < 8; ++k) c[k] = a[k] - b[k];
  return c;
}

const WeightVector& measure_vector() {
  static const WeightVector m = {-20, -30, -30, -20, -20, -30, -30, -20};
  return m;
}

bool leq(int u1, int u2) {
  auto [i1, j1] = symbol_pair(u1);
  auto [i2, j2] = symbol_pair(u2);
  return symbol_letter(u1) <= symbol_letter(u2) && i1 <= i2 && j1 <= j2;
}

Rat degree(const Monomial& m) {
  Rat d = 0;
  for (const auto& [sym, exp] : m) d += exp;
  return d;
}

std::vector<int> minimal_complement(const SymbolSet& Z) {
  std::vector<int> out;
  for (int u = 0; u < kNumSymbols; ++u) {
    if (Z.test(u)) continue;
    bool minimal = true;
    for (int v = 0; v < kNumSymbols && minimal; ++v)
      if (v != u && !Z.test(v) && leq(v, u)) minimal = false;
    if (minimal) out.push_back(u);
  }
  return out;
}

}  // namespace fivesel
