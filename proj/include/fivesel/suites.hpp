// Canonical verification suites: each function runs one module's checks
// against its shipped data and frozen expected values, returning a Report.
// The command-line tool and the acceptance harness both consume these.
#pragma once

#include <string>
#include <vector>

#include "fivesel/report.hpp"

namespace fivesel {

// Certificate checks for the ten cusp cases in <data_dir>/cusp_certificates.txt.
Report suite_cusp_verify(const std::string& data_dir);

// Vanishing-set partition generation, cover check, and the order-weight
// equivalence on all 2500 coordinate pairs.
Report suite_cusp_partition();

// Randomized (fixed-seed) Pfaffian identities, kernel vectors, and the
// Case-1 factorization identity.
Report suite_algebra_pfaffian();

// Reducibility screens on all 13 patterns, generic elements, and the
// factorization witnesses for the first three cases.
Report suite_algebra_screen();

// Row-by-row verification of the shipped local density tables.
Report suite_roots_verify_tables(const std::string& data_dir);

// Closed-form local densities against direct enumeration, the Euler-product
// family bounds, and the assembled sign-family densities.
Report suite_roots_densities(const std::string& data_dir);

// Rank-distribution linear programs, the closed-form chain bound, gadget
// inequalities, and family-weighted combinations.
Report suite_ranks_bounds();

// Invariant pair counting: brute-force cross-checks, growth envelopes, the
// fitted exponent, and the count-versus-volume grids.
Report suite_count();

// All suites in fixed order; threads > 1 runs them concurrently without
// changing the report order.
std::vector<Report> run_all(const std::string& data_dir, int threads);

}  // namespace fivesel
