#include "hyperdyn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperdyn/render.hpp"

namespace hyperdyn {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIP";
  }
  return "";
}

double distance_to_square_boundary(double c1, double c2) {
  constexpr double lo = MandelbrotSquare::lower;
  constexpr double hi = MandelbrotSquare::upper;
  if (MandelbrotSquare::contains_char(c1, c2)) {
    return std::min({c1 - lo, hi - c1, c2 - lo, hi - c2});
  }
  const double d1 = std::max({lo - c1, 0.0, c1 - hi});
  const double d2 = std::max({lo - c2, 0.0, c2 - hi});
  return std::hypot(d1, d2);
}

namespace {

CheckResult area_check(std::string name, const EscapeGrid& grid, double expected, double tolerance,
                       const VerifyOptions& options) {
  const double area = grid.bounded_area();
  const double rel = std::abs(area - expected) / expected;
  CheckStatus status = rel < tolerance ? CheckStatus::Pass : CheckStatus::Fail;
  if (grid.width() < options.min_area_resolution || grid.height() < options.min_area_resolution) {
    status = CheckStatus::Skipped;
  }
  std::ostringstream detail;
  detail << "area " << area << " vs " << expected << " (" << grid.width() << "x" << grid.height() << ")";
  return {std::move(name), rel, tolerance, status, detail.str()};
}

}  // namespace

std::vector<CheckResult> run_grid_checks(const VerifyOptions& options) {
  std::vector<CheckResult> results;
  const auto w = options.width;
  const auto h = options.height;

  const Region mandel_window(-2.5, 2.5, -2.5, 2.5);
  const auto analytic = render_mandelbrot(mandel_window, w, h, options.depth,
                                          BoundednessVariant::ComponentBounded, RenderMode::Analytic,
                                          options.threads);
  results.push_back(area_check("mandelbrot-square-area", analytic, MandelbrotSquare::area, 0.005, options));

  {
    const auto iterative = render_mandelbrot(mandel_window, w, h, options.depth,
                                             BoundednessVariant::ComponentBounded, RenderMode::Iterative,
                                             options.threads);
    const auto report = diff_grids(analytic, iterative);
    // A pixel in (a, b) maps to a pixel scaled by sqrt(2) in (c1, c2).
    const double pixel_diagonal = std::sqrt(2.0) * std::hypot(mandel_window.width() / static_cast<double>(w),
                                                              mandel_window.height() / static_cast<double>(h));
    double worst = 0.0;
    for_each_disagreement(analytic, iterative, [&](std::size_t i, std::size_t j) {
      const Eigen::Vector2d p = analytic.center(i, j);
      const HyperParam c(p.x(), p.y());
      worst = std::max(worst, distance_to_square_boundary(c.c1(), c.c2()));
    });
    const bool ok = report.disagree_fraction < 0.005 && worst <= 2.0 * pixel_diagonal;
    std::ostringstream detail;
    detail << report.disagree_count << "/" << report.total_pixels << " pixels disagree at depth " << options.depth
           << ", farthest " << worst << " from the square boundary (limit " << 2.0 * pixel_diagonal << ")";
    results.push_back({"mandelbrot-oracle-agreement", report.disagree_fraction, 0.005,
                       ok ? CheckStatus::Pass : CheckStatus::Fail, detail.str()});
  }

  {
    const HyperParam c(0.0, 0.0);
    const auto grid = render_julia(c, Region(-1.5, 1.5, -1.5, 1.5), w, h, options.depth, RenderMode::Analytic,
                                   options.threads);
    results.push_back(area_check("julia-rectangle-area-c0", grid, 2.0, 0.01, options));
  }

  {
    const HyperParam c(-2.0, 0.0);
    const auto grid = render_julia(c, Region(-2.5, 2.5, -2.5, 2.5), w, h, options.depth, RenderMode::Analytic,
                                   options.threads);
    results.push_back(area_check("julia-rectangle-area-c-2", grid, 8.0, 0.01, options));
  }

  {
    // Every iterated pixel inside K_H costs the full depth, so this one is
    // capped in resolution.
    const std::size_t cw = std::min<std::size_t>(w, 256);
    const std::size_t ch = std::min<std::size_t>(h, 256);
    const HyperParam c(-2.0, 0.0);
    const Region window(-2.5, 2.5, -2.5, 2.5);
    const auto a = render_julia(c, window, cw, ch, options.depth, RenderMode::Analytic, options.threads);
    const auto it = render_julia(c, window, cw, ch, options.depth, RenderMode::Iterative, options.threads);
    const auto rect = *julia_bounding_rectangle(c);
    std::size_t mismatched = 0;
    for_each_disagreement(a, it, [&](std::size_t i, std::size_t j) {
      const Eigen::Vector2d p = a.center(i, j);
      const auto z = to_characteristic(HyperbolicNumber(p.x(), p.y()));
      const double margin = std::min(std::abs(std::abs(z.X) - rect.half_width_x),
                                     std::abs(std::abs(z.Y) - rect.half_width_y));
      if (margin >= 1e-6) ++mismatched;
    });
    std::ostringstream detail;
    detail << mismatched << " pixels away from the rectangle boundary disagree (" << cw << "x" << ch << ")";
    results.push_back({"julia-oracle-agreement-c-2", static_cast<double>(mismatched), 0.0,
                       mismatched == 0 ? CheckStatus::Pass : CheckStatus::Fail, detail.str()});
  }

  return results;
}

}  // namespace hyperdyn
