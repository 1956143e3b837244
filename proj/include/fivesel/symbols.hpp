// The 50-coordinate universe x^{(k)}_{ij}: letters a..e, index pairs 1<=i<j<=5.
// Shared by the reducibility screens, the weight bookkeeping, and the cusp
// certificate machinery, which all address coordinates by names like "c15".
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace fivesel {

inline constexpr int kNumLetters = 5;
inline constexpr int kNumPairs = 10;
inline constexpr int kNumSymbols = kNumLetters * kNumPairs;

// Upper-triangle order used everywhere, including the quintuple text format.
inline constexpr std::array<std::pair<int, int>, kNumPairs> kPairs = {
    {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}};

// 1-based i<j -> 0..9; -1 if not a valid pair.
int pair_index(int i, int j);

// letter 0..4 (a..e), 1-based i<j -> 0..49.
int symbol_index(int letter, int i, int j);

// "a12" .. "e45"
std::string symbol_name(int index);

// Parses "a12"; rejects anything else.
std::optional<int> symbol_from_name(std::string_view name);

inline int symbol_letter(int index) { return index / kNumPairs; }
inline std::pair<int, int> symbol_pair(int index) { return kPairs[index % kNumPairs]; }

}  // namespace fivesel
