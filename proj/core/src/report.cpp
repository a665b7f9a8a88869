#include "gauge/report.hpp"

#include <nlohmann/json.hpp>
#include <cstdio>
#include <sstream>

namespace gauge {

namespace {
using ordered_json = nlohmann::ordered_json;

// 17 significant digits keeps the decimal round trip exact and the byte
// stream reproducible.
std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json report_json(const Report& r) {
  ordered_json j;
  j["scenario"] = r.scenario;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    if (c.timing) continue;
    ordered_json cj;
    cj["name"] = c.name;
    cj["law"] = c.law;
    cj["measured"] = num17(c.measured);
    cj["expected"] = num17(c.expected);
    cj["tolerance"] = num17(c.tolerance);
    cj["pass"] = c.pass;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["overall_pass"] = r.overall_pass();
  return j;
}
}  // namespace

std::string to_json(const Report& r) { return report_json(r).dump(2) + "\n"; }

std::string to_json(const std::vector<Report>& rs) {
  ordered_json j;
  ordered_json arr = ordered_json::array();
  bool all = true;
  for (const auto& r : rs) {
    arr.push_back(report_json(r));
    all = all && r.overall_pass();
  }
  j["reports"] = arr;
  j["overall_pass"] = all;
  return j.dump(2) + "\n";
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "scenario: " << r.scenario;
  if (!r.parameters.empty()) {
    os << " (";
    bool first = true;
    for (const auto& [k, v] : r.parameters) {
      if (!first) os << ", ";
      os << k << "=" << v;
      first = false;
    }
    os << ")";
  }
  os << "\n";
  size_t w = 12;
  for (const auto& c : r.checks) w = std::max(w, c.name.size());
  char line[512];
  for (const auto& c : r.checks) {
    std::snprintf(line, sizeof line, "  %-*s  %-4s  measured=%-13.6g expected=%-13.6g tol=%-10.4g %s\n",
                  int(w), c.name.c_str(), c.pass ? "ok" : "FAIL", c.measured,
                  c.expected, c.tolerance, c.law.c_str());
    os << line;
  }
  std::snprintf(line, sizeof line, "  => %s  (%.2f s)\n",
                r.overall_pass() ? "PASS" : "FAIL", r.runtime_seconds);
  os << line;
  return os.str();
}

std::string to_text(const std::vector<Report>& rs) {
  std::ostringstream os;
  bool all = true;
  double total = 0;
  for (const auto& r : rs) {
    os << to_text(r);
    all = all && r.overall_pass();
    total += r.runtime_seconds;
  }
  char line[128];
  std::snprintf(line, sizeof line, "suite: %s  (%.2f s)\n",
                all ? "PASS" : "FAIL", total);
  os << line;
  return os.str();
}

}  // namespace gauge
