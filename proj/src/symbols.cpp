#include "fivesel/symbols.hpp"

namespace fivesel {

int pair_index(int i, int j) {
  for (int k = 0; k < kNumPairs; ++k)
    if (kPairs[k].first == i && kPairs[k].second == j) return k;
  return -1;
}

int symbol_index(int letter, int i, int j) {
  int p = pair_index(i, j);
  if (letter < 0 || letter >= kNumLetters || p < 0) return -1;
  return letter * kNumPairs + p;
}

std::string symbol_name(int index) {
  auto [i, j] = symbol_pair(index);
  std::string s;
  s += static_cast<char>('a' + symbol_letter(index));
  s += static_cast<char>('0' + i);
  s += static_cast<char>('0' + j);
  return s;
}

std::optional<int> symbol_from_name(std::string_view name) {
  if (name.size() != 3) return std::nullopt;
  int letter = name[0] - 'a';
  int i = name[1] - '0', j = name[2] - '0';
  int idx = symbol_index(letter, i, j);
  if (idx < 0) return std::nullopt;
  return idx;
}

}  // namespace fivesel
