#pragma once

#include <string>
#include <vector>

namespace cdk {

// Structured result of one verification or computation case.
struct Report {
  std::string id;                       // stable case id, e.g. "su2/dirac-square"
  std::string name;                     // identity or computation name
  std::string status;                   // "pass" | "fail" | "value"
  std::string value;                    // rendered result for status == "value"
  std::vector<std::string> witnesses;   // offending monomials / numeric residuals
  double ms = 0.0;
  std::string provenance;               // the formula or statement being checked

  bool passed() const { return status != "fail"; }

  static Report pass(std::string id, std::string name, std::string prov) {
    return {std::move(id), std::move(name), "pass", "", {}, 0.0, std::move(prov)};
  }
  static Report fail(std::string id, std::string name, std::string prov,
                     std::vector<std::string> wit) {
    return {std::move(id), std::move(name), "fail", "", std::move(wit), 0.0, std::move(prov)};
  }
  static Report of_value(std::string id, std::string name, std::string prov, std::string val) {
    return {std::move(id), std::move(name), "value", std::move(val), {}, 0.0, std::move(prov)};
  }
};

// JSON document: {"meta": {...}, "cases": [...], "summary": {...}}, schema v1.
// Timings are omitted unless with_timings (deterministic output by default).
std::string reports_to_json(const std::vector<Report>& cases, bool with_timings = false);
std::vector<Report> reports_from_json(const std::string& json_text);
std::string report_to_text(const Report& r);

}  // namespace cdk
