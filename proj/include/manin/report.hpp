#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace manin {

enum class Verdict { pass, fail, skipped_by_truncation };

std::string to_string(Verdict v);

struct Witness {
  std::vector<uint32_t> indices;
  std::string detail;
};

/// Outcome of one exhaustive (or window-conditional) check.
///
/// `checked` counts instances that were fully evaluated, `skipped` those whose
/// evaluation would need data outside a truncation window. At most
/// kMaxWitnesses witnesses are kept, in the order instances were visited
/// (lexicographic in the basis indices).
struct CheckReport {
  static constexpr size_t kMaxWitnesses = 10;

  std::string name;
  uint64_t checked = 0;
  uint64_t skipped = 0;
  uint64_t violations = 0;
  std::vector<Witness> witnesses;
  std::string note;

  void record_violation(std::vector<uint32_t> indices, std::string detail = {});
  Verdict verdict() const;
  bool ok() const { return violations == 0; }
};

}  // namespace manin
