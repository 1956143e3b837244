// Torus weight calculus on the 50 coordinates: each variable x_ij scales
// under the diagonal torus a(s1..s8) by a Laurent monomial in s1..s8, and
// the combinatorial order on variables mirrors componentwise weight order.
#pragma once

#include <array>
#include <bitset>
#include <map>
#include <vector>

#include "fivesel/rational.hpp"
#include "fivesel/symbols.hpp"

namespace fivesel {

using WeightVector = std::array<Rat, 8>;  // exponents of s1..s8
using SymbolSet = std::bitset<kNumSymbols>;
// symbol index -> exponent; entries must be > 0 (absent means exponent 0)
using Monomial = std::map<int, Rat>;

// w(x_ij) = r_i + r_j in slots 1..4 plus the letter's row in slots 5..8,
// where r_1..r_5 are the rows (-4,-3,-2,-1), (1,-3,-2,-1), (1,2,-2,-1),
// (1,2,3,-1), (1,2,3,4) of the torus block.
WeightVector weight(int symbol);
WeightVector weight(const Monomial& m);

WeightVector wv_add(const WeightVector& a, const WeightVector& b);
WeightVector wv_sub(const WeightVector& a, const WeightVector& b);

// The Haar-measure twist s1^-20 s2^-30 s3^-30 s4^-20 s5^-20 s6^-30 s7^-30 s8^-20.
const WeightVector& measure_vector();

// letter(u1) <= letter(u2) and i1 <= i2 and j1 <= j2.
bool leq(int u1, int u2);

// total exponent sum
Rat degree(const Monomial& m);

// Minimal elements of Var \ Z under leq.
std::vector<int> minimal_complement(const SymbolSet& Z);

}  // namespace fivesel
