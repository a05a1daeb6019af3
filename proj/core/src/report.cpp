#include "nabt/report.hpp"

#include <algorithm>

namespace nabt {

std::string_view to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::pass:
      return "pass";
    case CaseStatus::fail:
      return "fail";
    case CaseStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

std::size_t VerificationReport::count(CaseStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [s](const CaseResult& c) { return c.status == s; }));
}

void VerificationReport::append(VerificationReport other) {
  for (auto& c : other.cases) cases.push_back(std::move(c));
  for (auto& f : other.config)
    if (std::find(config.begin(), config.end(), f) == config.end()) config.push_back(std::move(f));
}

}  // namespace nabt
