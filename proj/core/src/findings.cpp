#include "lsb/findings.hpp"

#include <fstream>

#include "lsb/errors.hpp"

namespace lsb {

std::string format_finding(const FindingRecord& rec) {
  std::string out = "=== finding kind=" + rec.kind + " ===\n";
  for (const auto& [key, value] : rec.fields) out += key + ": " + value + "\n";
  if (!rec.algebra_lsa.empty()) {
    out += "algebra:\n" + rec.algebra_lsa;
    if (rec.algebra_lsa.back() != '\n') out += "\n";
  }
  out += "=== end ===\n";
  return out;
}

void append_finding(const std::string& path, const FindingRecord& rec) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("cannot open findings log: " + path);
  out << format_finding(rec);
}

}  // namespace lsb
