#include "cdk/report.hpp"

#include <json.hpp>

#include <sstream>

namespace cdk {

using nlohmann::json;

std::string reports_to_json(const std::vector<Report>& cases, bool with_timings) {
  json doc;
  doc["meta"] = {{"schema", "v1"}, {"tool", "cdk"}};
  json arr = json::array();
  int npass = 0, nfail = 0, nvalue = 0;
  for (const auto& r : cases) {
    json c = {{"id", r.id},
              {"name", r.name},
              {"status", r.status},
              {"provenance", r.provenance}};
    if (!r.value.empty()) c["value"] = r.value;
    if (!r.witnesses.empty()) c["witnesses"] = r.witnesses;
    if (with_timings) c["ms"] = r.ms;
    arr.push_back(std::move(c));
    if (r.status == "pass") ++npass;
    else if (r.status == "fail") ++nfail;
    else ++nvalue;
  }
  doc["cases"] = std::move(arr);
  doc["summary"] = {{"pass", npass}, {"fail", nfail}, {"value", nvalue}};
  return doc.dump(2) + "\n";
}

std::vector<Report> reports_from_json(const std::string& text) {
  json doc = json::parse(text);
  std::vector<Report> out;
  for (const auto& c : doc.at("cases")) {
    Report r;
    r.id = c.at("id").get<std::string>();
    r.name = c.at("name").get<std::string>();
    r.status = c.at("status").get<std::string>();
    r.provenance = c.at("provenance").get<std::string>();
    if (c.contains("value")) r.value = c["value"].get<std::string>();
    if (c.contains("witnesses")) r.witnesses = c["witnesses"].get<std::vector<std::string>>();
    if (c.contains("ms")) r.ms = c["ms"].get<double>();
    out.push_back(std::move(r));
  }
  return out;
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  if (r.status == "value") {
    os << "[VALUE] " << r.id << ": " << r.value;
  } else {
    os << (r.passed() ? "[PASS] " : "[FAIL] ") << r.id;
  }
  if (!r.provenance.empty()) os << "  (" << r.provenance << ")";
  os << "  [" << r.ms << " ms]";
  for (const auto& w : r.witnesses) os << "\n    witness: " << w;
  return os.str();
}

}  // namespace cdk
