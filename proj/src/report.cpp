#include "manin/report.hpp"

namespace manin {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::skipped_by_truncation:
      return "skipped-by-truncation";
  }
  return "unknown";
}

void CheckReport::record_violation(std::vector<uint32_t> indices, std::string detail) {
  ++violations;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back({std::move(indices), std::move(detail)});
}

Verdict CheckReport::verdict() const {
  if (violations > 0) return Verdict::fail;
  if (checked == 0 && skipped > 0) return Verdict::skipped_by_truncation;
  return Verdict::pass;
}

}  // namespace manin
