#include "lcs/report.hpp"

#include <json.hpp>

#include <ostream>

namespace lcs {

namespace {
const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}
}  // namespace

void emit_jsonl(std::ostream& os, const std::vector<Report>& reports) {
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["target"] = r.target;
    j["status"] = status_name(r.status);
    if (!r.witness.empty()) j["witness"] = r.witness;
    os << j.dump() << '\n';
  }
}

void emit_summary(std::ostream& os, const std::vector<Report>& reports, double total_ms) {
  int pass = 0, fail = 0, skipped = 0;
  for (const auto& r : reports) {
    if (r.status == Status::Pass) ++pass;
    if (r.status == Status::Fail) ++fail;
    if (r.status == Status::Skipped) ++skipped;
  }
  os << "checks: " << pass << " pass, " << fail << " fail";
  if (skipped) os << ", " << skipped << " skipped";
  os << " (" << total_ms / 1000.0 << "s)\n";
  for (const auto& r : reports)
    if (r.status == Status::Fail)
      os << "  FAIL " << r.check << " " << r.target << ": " << r.witness << "\n";
}

bool all_passed(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (r.status == Status::Fail) return false;
  return true;
}

}  // namespace lcs
