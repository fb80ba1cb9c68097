#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orlicz {

/// One compared value; booleans are recorded as expected 1, actual 0 or 1.
struct GalleryCheck {
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double abs_err() const;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<GalleryCheck> checks;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string error;  // set when the run threw
  bool pass() const;
};

/// Criteria 1..10 of the acceptance suite.
std::vector<int> gallery_ids();

/// Runs one criterion; exceptions are caught and reported as a failure.
CriterionResult run_criterion(int id, std::uint64_t seed = 20261018);

/// `K PASS|FAIL title (seconds)` plus the failing checks.
std::string summary_line(const CriterionResult& r, bool verbose = false);

/// Columns name,expected,actual,abs_err,verdict with 17 significant digits.
std::string gallery_csv(const std::vector<CriterionResult>& results);

}  // namespace orlicz
