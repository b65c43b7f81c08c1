#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hyperdyn {

struct VerifyOptions {
  std::uint32_t depth = 2000;
  std::size_t width = 2000;
  std::size_t height = 2000;
  unsigned threads = 0;
  /// Area checks below this resolution (either axis) are reported as skipped.
  std::size_t min_area_resolution = 256;
};

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  double value;      // measured metric
  double threshold;  // pass iff value < threshold (value <= for exact checks)
  CheckStatus status;
  std::string detail;
};

/// Distance from (c1, c2) to the boundary of [-2, 1/4]^2.
double distance_to_square_boundary(double c1, double c2);

/// Grid-based cross-checks between analytic predicates and escape iteration.
std::vector<CheckResult> run_grid_checks(const VerifyOptions& options);

}  // namespace hyperdyn
