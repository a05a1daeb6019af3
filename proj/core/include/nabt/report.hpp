#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nabt {

enum class CaseStatus { pass, fail, skipped };

std::string_view to_string(CaseStatus s);

using Fact = std::pair<std::string, std::string>;

struct CaseResult {
  std::string suite;
  std::string subject;
  std::string check;
  CaseStatus status = CaseStatus::pass;
  /// Failure or skip reason.
  std::string detail;
  /// Element indices of the offending tuple, in the order named by `detail`.
  std::vector<std::uint64_t> witness;
  std::vector<Fact> facts;
  double seconds = 0;
};

struct VerificationReport {
  std::vector<Fact> config;
  std::vector<CaseResult> cases;

  std::size_t count(CaseStatus s) const;
  bool ok() const { return count(CaseStatus::fail) == 0; }
  void append(VerificationReport other);
};

}  // namespace nabt
