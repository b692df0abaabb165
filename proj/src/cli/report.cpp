#include "apforge/cli/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace apforge::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Undecided: return "undecided";
    case Status::UncheckedClaim: return "unchecked-claim";
  }
  return "?";
}

void RunReport::add(const std::string& id, bool ok, std::string expected, std::string actual, double ms) {
  records.push_back({id, ok ? Status::Pass : Status::Fail, std::move(expected), std::move(actual), ms});
}

Summary RunReport::summary() const {
  Summary s;
  for (const auto& r : records) {
    switch (r.status) {
      case Status::Pass: ++s.pass; break;
      case Status::Fail: ++s.fail; break;
      case Status::Undecided: ++s.undecided; break;
      case Status::UncheckedClaim: ++s.unchecked_claim; break;
    }
  }
  return s;
}

nlohmann::ordered_json RunReport::to_json(bool timings) const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["corpus_version"] = corpus_version;
  j["corpus_hash"] = corpus_hash;
  auto& recs = j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json o;
    o["id"] = r.id;
    o["status"] = to_string(r.status);
    o["expected"] = r.expected;
    o["actual"] = r.actual;
    o["runtime_ms"] = timings ? std::round(r.runtime_ms * 1000) / 1000 : 0.0;
    recs.push_back(std::move(o));
  }
  const Summary s = summary();
  j["summary"] = {{"total", records.size()},
                  {"pass", s.pass},
                  {"fail", s.fail},
                  {"undecided", s.undecided},
                  {"unchecked_claim", s.unchecked_claim}};
  return j;
}

std::string RunReport::table(bool timings) const {
  std::size_t width = 2;
  for (const auto& r : records) width = std::max(width, r.id.size());
  std::ostringstream os;
  for (const auto& r : records) {
    os << std::left << std::setw(16) << to_string(r.status) << std::setw(static_cast<int>(width) + 2) << r.id;
    if (r.status == Status::UncheckedClaim) {
      os << r.expected;
    } else {
      os << r.actual;
      if (r.status != Status::Pass) os << "  (expected " << r.expected << ")";
    }
    if (timings && r.runtime_ms >= 1) os << "  [" << std::fixed << std::setprecision(0) << r.runtime_ms << " ms]";
    os << "\n";
  }
  const Summary s = summary();
  os << "-- " << records.size() << " checks: " << s.pass << " pass, " << s.fail << " fail, " << s.undecided
     << " undecided, " << s.unchecked_claim << " unchecked claims\n";
  return os.str();
}

}  // namespace apforge::cli
