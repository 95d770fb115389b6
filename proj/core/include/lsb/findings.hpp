#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lsb {

/// One record of the append-only findings log: a failed law, an
/// oracle/classifier disagreement, or an inhabitation search result.
struct FindingRecord {
  std::string kind;  // "law-fail" | "cross-check-disagree" | "search"
  std::vector<std::pair<std::string, std::string>> fields;
  std::string algebra_lsa;  // serialized algebra, empty when not applicable
};

std::string format_finding(const FindingRecord& rec);

/// Append one record to the log file (created on first use).
void append_finding(const std::string& path, const FindingRecord& rec);

}  // namespace lsb
