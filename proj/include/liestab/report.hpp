#pragma once

#include <string>
#include <vector>

namespace liestab {

enum class CheckStatus {
  Pass,
  Fail,
  Advisory,  // recorded discrepancy that does not fail the run
  Skipped,   // check not applicable to this input
};

std::string to_string(CheckStatus s);

/// One verified claim: what was predicted, what was computed, and whether
/// they agree.  All comparisons are exact; there are no tolerances.
struct CheckRow {
  std::string name;
  std::string claim;  // self-contained statement of the governing fact
  std::string predicted;
  std::string computed;
  CheckStatus status;
};

struct StructureReport {
  std::string subject;
  std::vector<CheckRow> rows;

  void add(std::string name, std::string claim, std::string predicted, std::string computed,
           bool pass);
  void add_row(CheckRow row) { rows.push_back(std::move(row)); }
  void advisory(std::string name, std::string claim, std::string predicted, std::string computed);
  void skipped(std::string name, std::string claim);

  bool all_passed() const;
  std::size_t failures() const;
};

}  // namespace liestab
