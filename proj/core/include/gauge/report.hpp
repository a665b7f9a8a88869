#pragma once

#include <string>
#include <vector>

namespace gauge {

// One verification record: a measured quantity against its pinned tolerance.
// `law` states the identity or bound being checked.
struct Check {
  std::string name;
  std::string law;
  double measured = 0;
  double expected = 0;
  double tolerance = 0;
  bool pass = false;
  // Wall-clock budgets: graded like any check but left out of the canonical
  // JSON so fixed seed and config give byte-identical reports.
  bool timing = false;
};

struct Report {
  std::string scenario;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Check> checks;
  double runtime_seconds = 0;

  bool overall_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  Check& add(const std::string& name, const std::string& law, double measured,
             double expected, double tolerance) {
    Check c;
    c.name = name;
    c.law = law;
    c.measured = measured;
    c.expected = expected;
    c.tolerance = tolerance;
    c.pass = std::abs(measured - expected) <= tolerance;
    checks.push_back(c);
    return checks.back();
  }

  // Bound-style check: measured <= tolerance.
  Check& add_bound(const std::string& name, const std::string& law,
                   double measured, double tolerance) {
    Check c;
    c.name = name;
    c.law = law;
    c.measured = measured;
    c.expected = 0;
    c.tolerance = tolerance;
    c.pass = measured <= tolerance;
    checks.push_back(c);
    return checks.back();
  }

  // Wall-clock budget: measured seconds <= budget.
  Check& add_timing(const std::string& name, const std::string& law,
                    double seconds, double budget) {
    Check& c = add_bound(name, law, seconds, budget);
    c.timing = true;
    return c;
  }

  // Lower-bound check (convergence orders): measured >= threshold.
  Check& add_floor(const std::string& name, const std::string& law,
                   double measured, double floor) {
    Check c;
    c.name = name;
    c.law = law;
    c.measured = measured;
    c.expected = floor;
    c.tolerance = 0;
    c.pass = measured >= floor;
    checks.push_back(c);
    return checks.back();
  }
};

// Deterministic machine format: stable key order, no timing fields.
std::string to_json(const Report& r);
std::string to_json(const std::vector<Report>& rs);
// Human format: aligned table including the runtime.
std::string to_text(const Report& r);
std::string to_text(const std::vector<Report>& rs);

}  // namespace gauge
