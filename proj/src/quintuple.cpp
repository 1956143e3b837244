#include "fivesel/quintuple.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace fivesel {

Quintuple::Quintuple() {
  for (auto& m : comp) m = SkewMatrix::zero(5);
}

Rat Quintuple::coord(int letter, int i, int j) const {
  return comp[letter].entry(i - 1, j - 1);
}

void Quintuple::set_coord(int letter, int i, int j, const Rat& value) {
  if (i >= j) throw std::invalid_argument("set_coord: need i < j");
  comp[letter].upper_at(i - 1, j - 1) = value;
}

Rat Quintuple::coord(int symbol) const {
  auto [i, j] = symbol_pair(symbol);
  return coord(symbol_letter(symbol), i, j);
}

void Quintuple::set_coord(int symbol, const Rat& value) {
  auto [i, j] = symbol_pair(symbol);
  set_coord(symbol_letter(symbol), i, j, value);
}

Quintuple model_element(const Rat& I, const Rat& J) {
  Quintuple v;
  v.set_coord(0, 1, 2, -J / 27);
  v.set_coord(0, 4, 5, 1);
  v.set_coord(1, 1, 2, -I / 3);
  v.set_coord(1, 2, 5, 1);
  v.set_coord(1, 3, 4, -1);
  v.set_coord(2, 1, 5, 1);
  v.set_coord(2, 2, 4, 1);
  v.set_coord(3, 1, 4, 1);
  v.set_coord(3, 2, 3, 1);
  v.set_coord(4, 1, 3, 1);
  return v;
}

SkewMatrix evaluate(const Quintuple& v, const std::array<Rat, 5>& t) {
  SkewMatrix m = SkewMatrix::zero(5);
  for (int k = 0; k < 5; ++k) {
    if (t[k] == 0) continue;
    m = skew_add(m, skew_scale(t[k], v.comp[k]));
  }
  return m;
}

LinearForm entry_form(const Quintuple& v, int i, int j) {
  LinearForm f;
  for (int k = 0; k < 5; ++k) f[k] = v.coord(k, i, j);
  return f;
}

std::array<QuadricForm, 5> sub_pfaffians(const Quintuple& v) {
  std::array<QuadricForm, 5> q;
  for (int i = 1; i <= 5; ++i) {
    int deleted = 6 - i;
    int r[4], n = 0;
    for (int k = 1; k <= 5; ++k)
      if (k != deleted) r[n++] = k;
    // Pf of the remaining 4x4: m12 m34 - m13 m24 + m14 m23 in local indices.
    QuadricForm pf = qf_add(
        qf_sub(product_form(entry_form(v, r[0], r[1]), entry_form(v, r[2], r[3])),
               product_form(entry_form(v, r[0], r[2]), entry_form(v, r[1], r[3]))),
        product_form(entry_form(v, r[0], r[3]), entry_form(v, r[1], r[2])));
    q[i - 1] = (i % 2 == 1) ? qf_neg(pf) : pf;
  }
  return q;
}

std::optional<Quintuple> parse_quintuple(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  if (lines.size() != 5) return std::nullopt;
  Quintuple v;
  for (int letter = 0; letter < 5; ++letter) {
    std::istringstream ls(lines[letter]);
    std::string tok;
    int count = 0;
    while (ls >> tok) {
      if (count >= kNumPairs) return std::nullopt;
      auto q = parse_rat(tok);
      if (!q) return std::nullopt;
      auto [i, j] = kPairs[count];
      v.set_coord(letter, i, j, *q);
      ++count;
    }
    if (count != kNumPairs) return std::nullopt;
  }
  return v;
}

std::string format_quintuple(const Quintuple& v) {
  std::string out;
  for (int letter = 0; letter < 5; ++letter) {
    for (int p = 0; p < kNumPairs; ++p) {
      if (p) out += ' ';
      auto [i, j] = kPairs[p];
      out += fraction_string(v.coord(letter, i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace fivesel
