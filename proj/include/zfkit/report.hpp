#pragma once

#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace zfkit {

struct Witness {
  std::string graph6;
  int failed_number = 0;
  std::vector<std::string> annotations;
};

/// A claimed value that did not hold on the observed data.
struct Discrepancy {
  std::string claim;
  std::string expected;
  std::string observed;
};

/// Result of one verification campaign. `discrepancies` is empty exactly when
/// every expectation for the campaign held.
struct CampaignReport {
  std::string campaign;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  long scanned = 0;
  long matches = 0;
  std::map<std::string, long> counts;
  std::vector<Witness> witnesses;
  std::vector<Discrepancy> discrepancies;
  std::vector<std::string> findings;
  double runtime_seconds = 0.0;

  bool ok() const { return discrepancies.empty(); }

  void expect(const std::string& claim, const std::string& expected, const std::string& observed) {
    if (expected != observed) discrepancies.push_back({claim, expected, observed});
  }
};

/// JSON rendering. Runtime is left out unless asked for, so reports of equal
/// inputs are byte-identical.
inline nlohmann::ordered_json to_json(const CampaignReport& r, bool include_runtime = false) {
  nlohmann::ordered_json j;
  j["campaign"] = r.campaign;
  j["params"] = r.params;
  j["scanned"] = r.scanned;
  j["matches"] = r.matches;
  j["counts"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.counts) j["counts"][k] = v;
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses)
    j["witnesses"].push_back({{"graph6", w.graph6}, {"F", w.failed_number}, {"annotations", w.annotations}});
  j["discrepancies"] = nlohmann::ordered_json::array();
  for (const auto& d : r.discrepancies)
    j["discrepancies"].push_back({{"claim", d.claim}, {"expected", d.expected}, {"observed", d.observed}});
  j["findings"] = r.findings;
  j["ok"] = r.ok();
  if (include_runtime) j["runtime_seconds"] = r.runtime_seconds;
  return j;
}

inline std::string to_pretty(const CampaignReport& r) {
  std::ostringstream os;
  os << "campaign      " << r.campaign << "\n";
  os << "params        " << r.params.dump() << "\n";
  os << "scanned       " << r.scanned << "\n";
  os << "matches       " << r.matches << "\n";
  for (const auto& [k, v] : r.counts) os << "  " << std::left << std::setw(28) << k << v << "\n";
  if (!r.witnesses.empty()) {
    os << "witnesses (" << r.witnesses.size() << ")\n";
    for (const auto& w : r.witnesses) {
      os << "  " << std::left << std::setw(14) << w.graph6 << " F=" << w.failed_number;
      for (const auto& a : w.annotations) os << "  " << a;
      os << "\n";
    }
  }
  os << "discrepancies (" << r.discrepancies.size() << ")\n";
  for (const auto& d : r.discrepancies)
    os << "  " << d.claim << "\n    expected: " << d.expected << "\n    observed: " << d.observed << "\n";
  if (!r.findings.empty()) {
    os << "findings\n";
    for (const auto& f : r.findings) os << "  " << f << "\n";
  }
  os << "status        " << (r.ok() ? "ok" : "DISCREPANCY") << "\n";
  return os.str();
}

}  // namespace zfkit
