#pragma once

#include <vector>

#include "fivesel/rational.hpp"

namespace fivesel {

// Sign of the quantity 4I^3 - J^2 attached to an integer pair (I, J).
enum class DiscSign { Positive, Negative, Zero };

// Number of integer pairs (I, J) with max(|I|^3, J^2/4) < X whose
// 4I^3 - J^2 has the requested sign.  Uses closed-form J-ranges per I
// (O(X^{1/3}) iterations), not a two-dimensional scan.  Requires X >= 1.
Int count_ij(const Int& X, DiscSign sign);

struct IJCounts {
  Int plus, minus, zero;
  Int total() const { return plus + minus + zero; }
};

// All three counts at once; they partition the height box.
IJCounts count_ij_total(const Int& X);

// Number of pairs in the full height box: |I|^3 < X and J^2 < 4X.
Int count_ij_box(const Int& X);

// O(X^{5/6}) two-dimensional scan; cross-check oracle for small X.
Int count_ij_brute(const Int& X, DiscSign sign);

// Sufficient integer certificate for |N(X) - c X^{5/6}| <= 5 X^{1/2},
// where N is the count for the given nonzero sign and c = 8/5 (positive)
// or 32/5 (negative).  With r = floor(X^{5/6}) and s = floor(X^{1/2}),
// the two integer inequalities
//     5N <= 8r + 25s          and   8(r + 1) <= 5N + 25s      (c = 8/5)
//     5N <= 32r + 25s         and   32(r + 1) <= 5N + 25s     (c = 32/5)
// imply the envelope for the real-valued roots, since
// r <= X^{5/6} < r + 1 and s <= X^{1/2} < s + 1.
struct EnvelopeReport {
  Int X;
  Int count;
  Int r, s;  // floor(X^{5/6}), floor(X^{1/2})
  bool upper_ok = false;
  bool lower_ok = false;
  bool ok() const { return upper_ok && lower_ok; }
};
EnvelopeReport check_envelope(const Int& X, DiscSign sign);

// Least-squares slope of log count(10^k) against log 10^k for k = 4..12.
double fitted_exponent(DiscSign sign);

// ---- Lattice points vs volume for scaled bounded regions -------------

// Shipped bounded region families (boundedness holds by construction):
//   Cube     [0, t]^3 in Z^3
//   Disk     x^2 + y^2 <= t^2 in Z^2
//   Simplex  x, y >= 0, x + y <= t in Z^2
enum class RegionKind { Cube, Disk, Simplex };

struct DavenportRow {
  long t = 0;
  Int count;       // lattice points in the t-scaled region
  Rat volume;      // exact, except Disk uses a rational pi within 1e-12
  Rat projection;  // largest volume among coordinate-subspace projections
  Rat diff;        // |count - volume|
  Rat ratio;       // diff / max(projection, 1)
};

// One row of the count-vs-volume comparison.  Requires t >= 1.
DavenportRow davenport_demo(RegionKind kind, long t);

struct DavenportReport {
  RegionKind kind = RegionKind::Cube;
  Rat bound;  // region-specific ratio ceiling
  std::vector<DavenportRow> rows;
  bool ok = false;  // every ratio <= bound
};

// Runs davenport_demo over the geometric grid t = 10, 20, 40, 80, 160 and
// checks every ratio against the region's ceiling (Cube 4, Disk 2,
// Simplex 2).
DavenportReport davenport_grid(RegionKind kind);

}  // namespace fivesel
