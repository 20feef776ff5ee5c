#ifndef LCS_REPORT_HPP
#define LCS_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lcs {

enum class Status { Pass, Fail, Skipped };

struct Report {
  std::string check;
  std::string target;
  Status status = Status::Pass;
  std::string witness;  // residual or generator tuple, empty on pass
  double ms = 0.0;      // stderr summary only; never in the JSON stream
};

// One JSON object per line, deterministic field order, no timing field.
void emit_jsonl(std::ostream& os, const std::vector<Report>& reports);

// Human summary (totals and failures) for standard error.
void emit_summary(std::ostream& os, const std::vector<Report>& reports, double total_ms);

bool all_passed(const std::vector<Report>& reports);

}  // namespace lcs

#endif
