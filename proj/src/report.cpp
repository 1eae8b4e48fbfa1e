#include "liestab/report.hpp"

namespace liestab {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Advisory: return "advisory";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

void StructureReport::add(std::string name, std::string claim, std::string predicted,
                          std::string computed, bool pass) {
  rows.push_back(CheckRow{std::move(name), std::move(claim), std::move(predicted),
                          std::move(computed), pass ? CheckStatus::Pass : CheckStatus::Fail});
}

void StructureReport::advisory(std::string name, std::string claim, std::string predicted,
                               std::string computed) {
  rows.push_back(CheckRow{std::move(name), std::move(claim), std::move(predicted),
                          std::move(computed), CheckStatus::Advisory});
}

void StructureReport::skipped(std::string name, std::string claim) {
  rows.push_back(
      CheckRow{std::move(name), std::move(claim), "", "", CheckStatus::Skipped});
}

bool StructureReport::all_passed() const { return failures() == 0; }

std::size_t StructureReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : rows)
    if (r.status == CheckStatus::Fail) ++n;
  return n;
}

}  // namespace liestab
