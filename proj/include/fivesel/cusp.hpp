// Cusp-bound certificates: the partition of coordinate vanishing sets, the
// 10-set cover, and the per-case monomial certificates whose weight
// inequalities bound the cuspidal integrals.
#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fivesel/weights.hpp"

namespace fivesel {

struct CuspCertificate {
  int case_id = 0;
  SymbolSet Z;                    // vanishing set, contains a12
  Monomial pi;                    // the case's certificate monomial
  std::map<int, Monomial> pi_u;  // one helper monomial per u in Z \ {a12}
  Rat claimed_gap;                // #Z - deg(pi), as printed
};

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
};

// Line-oriented shipped format:
//   [case N]
//   Z = a12 a13 ...
//   gap = 0.1
//   pi = a35^4.12 b25^1.42 ...
//   piu a13 = a35^0.02 d13^0.98
// Blank lines and '#' comments are skipped. Throws std::invalid_argument on
// syntax errors; semantic problems are left for the verifiers to report.
std::vector<CuspCertificate> parse_certificates(std::string_view text);

// Checks, in exact arithmetic:
//  (i)  every component of measure + w(pi) + sum_{u not in Z} w(u) is < 0,
//  (ii) #Z - deg(pi) equals the claimed gap,
//  (iii) the gap is >= 1/10,
// plus well-formedness (a12 in Z, support(pi) disjoint from Z).
CheckReport verify_pi(const CuspCertificate& c);

// Checks for every u in Z \ {a12}:
//  (i)  a helper monomial exists, supported outside Z,
//  (ii) w(u) - w(pi_u) is componentwise <= 0 (the printed data attains 0 in
//       some components, so nonpositivity is the checkable reading; the
//       downstream argument only multiplies these against strictly negative
//       budgets),
//  (iii) pi / prod_u pi_u has all exponents >= 0.
CheckReport verify_pi_u(const CuspCertificate& c);

// The 10 maximal vanishing sets; every generated Z lies inside one of them.
const std::array<SymbolSet, 10>& cover_sets();

// Breadth-first generation from {a12}: children Z + {u} over minimal
// complement elements u, pruned when the child contains one of the 13
// reducibility sets. Returns all generated sets, deduplicated, seed included.
std::vector<SymbolSet> generate_partition();

struct CoverReport {
  bool ok = true;
  std::vector<int> cover_index;       // 1..10 per input set, 0 if uncovered
  std::vector<SymbolSet> uncovered;
};
CoverReport check_cover(const std::vector<SymbolSet>& sets);

// Multidegree test for degree-60 monomials with integer exponents: every
// letter total must be 12 and every index total (both subscripts) 24.
// Throws std::invalid_argument unless the total degree is exactly 60.
bool discriminant_multidegree_check(const std::map<int, long>& m);

std::string symbol_set_names(const SymbolSet& Z);  // "a12 a13 ..." for reports

}  // namespace fivesel
