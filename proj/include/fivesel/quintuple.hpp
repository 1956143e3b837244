// Quintuples (A,B,C,D,E) of skew-symmetric 5x5 matrices, the pencil
// M(t) = A t1 + ... + E t5, and its five 4x4 sub-Pfaffian quadrics.
//
// Sub-Pfaffian convention: Q_i = (-1)^i * Pf(M(t) with row/column 6-i deleted).
// Under it the Case-1 vanishing pattern gives Q1 = -M14(t) * M23(t) and the
// Case-2/3 patterns confine Gram(Q1) to its last row/column; the vector
// (Q5,Q4,Q3,Q2,Q1) evaluated at any t lies in the kernel of M(t).
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "fivesel/quadric.hpp"
#include "fivesel/skew.hpp"
#include "fivesel/symbols.hpp"

namespace fivesel {

struct Quintuple {
  std::array<SkewMatrix, 5> comp;  // A..E, letters 0..4

  Quintuple();  // zero quintuple

  // letter 0..4, indices 1-based (any i != j; signed).
  Rat coord(int letter, int i, int j) const;
  void set_coord(int letter, int i, int j, const Rat& value);  // requires i < j
  Rat coord(int symbol) const;  // by 0..49 symbol index
  void set_coord(int symbol, const Rat& value);

  bool operator==(const Quintuple&) const = default;
};

// The explicit model element with invariants (I, J): nonzero coordinates
// a12 = -J/27, a45 = 1, b12 = -I/3, b25 = 1, b34 = -1, c15 = 1, c24 = 1,
// d14 = 1, d23 = 1, e13 = 1.
Quintuple model_element(const Rat& I, const Rat& J);

// M(t) at a rational point.
SkewMatrix evaluate(const Quintuple& v, const std::array<Rat, 5>& t);

// The linear form M(t)_{ij} (1-based, signed).
LinearForm entry_form(const Quintuple& v, int i, int j);

// Q_1..Q_5 in the convention above.
std::array<QuadricForm, 5> sub_pfaffians(const Quintuple& v);

// Text format: 5 lines (letters A..E), 10 entries each in upper-triangle
// order (1,2),(1,3),(1,4),(1,5),(2,3),(2,4),(2,5),(3,4),(3,5),(4,5).
std::optional<Quintuple> parse_quintuple(std::string_view text);
std::string format_quintuple(const Quintuple& v);

}  // namespace fivesel
