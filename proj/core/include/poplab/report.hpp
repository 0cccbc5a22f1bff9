#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poplab/common.hpp"

namespace poplab {

/// One n of a verification: formula value, brute-force count and the
/// printed table value, each absent when there is nothing to compare.
struct ReportRow {
  int n = 0;
  std::optional<BigInt> formula_value;
  std::optional<BigInt> brute_value;
  std::optional<BigInt> table_value;
  bool match = true;
};

struct Report {
  std::string id;
  std::string kind;    // "theorem" or "conjecture"
  std::string method;  // method name of the canonical evaluation
  std::string pop;     // POP text
  std::string oeis;    // "A129952/A057711" style, may be empty
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;
  bool pass = false;
  std::string status;  // PASS, FAIL, SUPPORTED or MISMATCH

  /// Brute-force values where present, otherwise formula values, n >= 1.
  std::vector<BigInt> terms() const;

  /// Line-oriented table ending in the status line.
  std::string to_text() const;

  /// One JSON object; integers are decimal strings so no value is rounded.
  std::string to_json() const;
};

/// {"schema": 1, "reports": [...]} for a batch of reports.
std::string reports_to_json(const std::vector<Report>& reports);

}  // namespace poplab
