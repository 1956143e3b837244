#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fivesel/curves.hpp"
#include "fivesel/rational.hpp"

namespace fivesel {

// Valuation condition on a coefficient: exactly k, or at least k.
struct ValCond {
  bool exact = true;
  long k = 0;
};

// Optional extra condition on v_p of the discriminant.
struct ExtraCond {
  enum class Kind { None, Exact, EvenGE, OddGE };
  Kind kind = Kind::None;
  long v = 0;
};

// One row of a local density table: valuation conditions on (A, B), an
// optional discriminant-valuation condition, the exact density of curves
// matching them, and the relative split of that mass over the four classes
// (disc-cofactor mod 4, local sign) in the order (1,+1),(1,-1),(3,+1),(3,-1).
struct DensityTableRow {
  int id = 0;  // 1-based position within its table
  ValCond vA;
  ValCond vB;
  ExtraCond extra;
  Rat density;
  std::array<Rat, 4> rel;
};

struct DensityTable {
  long p = 0;  // 2 or 3
  std::vector<DensityTableRow> rows;
  Rat printed_total;                  // 4-decimal lower bound for the row sum
  std::array<Rat, 4> printed_cols;    // 4-decimal lower bounds per class
};

// Parse the shipped two-table data file; returns (table at 2, table at 3).
// Throws std::invalid_argument with a line number on malformed input.
std::pair<DensityTable, DensityTable> parse_density_tables(
    const std::string& text);
std::pair<DensityTable, DensityTable> load_density_tables(
    const std::string& path);

// The unique row whose conditions the curve satisfies, or nullopt when the
// table does not classify it (the rows cover most but not all curves).
std::optional<int> classify_row(const DensityTable& table,
                                const EllipticCurve& e);

// Exact per-class mass summed over rows (density times relative density).
std::array<Rat, 4> column_totals(const DensityTable& table);

// Exact sum of the density column.
Rat row_sum(const DensityTable& table);

struct TableReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

// Recompute every row density: bounded rows by exhaustive enumeration of
// (A, B) mod p^k (k = 9 at p = 2, k = 6 at p = 3), rows with unbounded
// discriminant conditions via factored enumeration of their geometric-series
// closed form. Also checks pairwise disjointness of rows, that each row's
// relative densities sum to 1, and that the exact row sum and column totals
// truncate to the printed 4-decimal bounds.
TableReport verify_table_densities(const DensityTable& table);

}  // namespace fivesel
