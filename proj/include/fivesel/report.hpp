// Check reports: a suite is a named list of checks, each carrying an id,
// a status, the expected and actual values as strings, and a short anchor
// note naming where the expected value comes from.
#pragma once

#include <string>
#include <vector>

#include "fivesel/rational.hpp"

namespace fivesel {

enum class CheckStatus { Pass, Fail, Info };

struct Check {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::string expected;
  std::string actual;
  std::string anchor;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  // Appends a pass/fail check depending on ok.
  void add(bool ok, std::string id, std::string expected, std::string actual,
           std::string anchor);
  // Appends an informational check; never affects the overall status.
  void info(std::string id, std::string expected, std::string actual,
            std::string anchor);

  bool ok() const;  // true iff no check failed
};

// Exact rendering: integers plainly ("66"), other rationals as a fraction
// followed by a six-place decimal approximation ("21/20 (~1.050000)").
std::string rat_string(const Rat& q);

bool all_ok(const std::vector<Report>& reports);

// Human-readable rendering, one line per check plus a final result line.
std::string render_text(const std::vector<Report>& reports);

// Machine-readable rendering; schema documented in the repository README.
std::string render_json(const std::vector<Report>& reports);

}  // namespace fivesel
