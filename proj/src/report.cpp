#include "fivesel/report.hpp"

#include <json.hpp>
#include <sstream>

namespace fivesel {

void Report::add(bool ok, std::string id, std::string expected,
                 std::string actual, std::string anchor) {
  checks.push_back(Check{std::move(id),
                         ok ? CheckStatus::Pass : CheckStatus::Fail,
                         std::move(expected), std::move(actual),
                         std::move(anchor)});
}

void Report::info(std::string id, std::string expected, std::string actual,
                  std::string anchor) {
  checks.push_back(Check{std::move(id), CheckStatus::Info, std::move(expected),
                         std::move(actual), std::move(anchor)});
}

bool Report::ok() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

std::string rat_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str() + " (~" +
         decimal_string(q, 6) + ")";
}

bool all_ok(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!r.ok()) return false;
  return true;
}

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Info:
      return "info";
  }
  return "?";
}

}  // namespace

std::string render_text(const std::vector<Report>& reports) {
  std::ostringstream out;
  size_t checks = 0, failures = 0;
  for (const auto& r : reports) {
    out << "== " << r.suite << " ==\n";
    for (const auto& c : r.checks) {
      ++checks;
      if (c.status == CheckStatus::Fail) ++failures;
      out << "  " << status_name(c.status) << "  " << c.id << ": expected "
          << c.expected << "; got " << c.actual;
      if (!c.anchor.empty()) out << "  [" << c.anchor << "]";
      out << "\n";
    }
  }
  out << "== result ==\n  " << (failures == 0 ? "PASS" : "FAIL") << ": "
      << reports.size() << " suite" << (reports.size() == 1 ? "" : "s") << ", "
      << checks << " check" << (checks == 1 ? "" : "s") << ", " << failures
      << " failure" << (failures == 1 ? "" : "s") << "\n";
  return out.str();
}

std::string render_json(const std::vector<Report>& reports) {
  nlohmann::json root;
  root["ok"] = all_ok(reports);
  root["reports"] = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json jr;
    jr["suite"] = r.suite;
    jr["ok"] = r.ok();
    jr["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) {
      nlohmann::json jc;
      jc["id"] = c.id;
      jc["status"] = c.status == CheckStatus::Pass   ? "pass"
                     : c.status == CheckStatus::Fail ? "fail"
                                                     : "info";
      jc["expected"] = c.expected;
      jc["actual"] = c.actual;
      jc["anchor"] = c.anchor;
      jr["checks"].push_back(jc);
    }
    root["reports"].push_back(jr);
  }
  return root.dump(2) + "\n";
}

}  // namespace fivesel
