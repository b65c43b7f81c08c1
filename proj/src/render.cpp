#include "hyperdyn/render.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace hyperdyn {

Region::Region(double xmin_, double xmax_, double ymin_, double ymax_)
    : xmin(xmin_), xmax(xmax_), ymin(ymin_), ymax(ymax_) {
  if (!std::isfinite(xmin) || !std::isfinite(xmax) || !std::isfinite(ymin) || !std::isfinite(ymax)) {
    throw std::invalid_argument("region bounds must be finite");
  }
  if (!(xmin < xmax) || !(ymin < ymax)) {
    throw std::invalid_argument("region must satisfy xmin < xmax and ymin < ymax");
  }
}

Eigen::Vector2d pixel_center(const Region& region, std::size_t width, std::size_t height, std::size_t i,
                             std::size_t j) {
  if (i >= width || j >= height) throw std::out_of_range("pixel index outside the grid");
  const double x = region.xmin + (static_cast<double>(i) + 0.5) * region.width() / static_cast<double>(width);
  const double y = region.ymax - (static_cast<double>(j) + 0.5) * region.height() / static_cast<double>(height);
  return {x, y};
}

std::string_view to_string(RenderMode mode) {
  return mode == RenderMode::Analytic ? "analytic" : "iterative";
}

std::string_view to_string(Plane plane) {
  return plane == Plane::Mandelbrot ? "mandelbrot" : "julia";
}

EscapeGrid::EscapeGrid(std::size_t width, std::size_t height, GridMeta meta)
    : width_(width), height_(height), meta_(std::move(meta)) {
  if (width == 0 || height == 0) throw std::invalid_argument("grid dimensions must be positive");
  if (meta_.depth < 1 || meta_.depth == kBounded) throw std::invalid_argument("depth out of range");
  cells_.assign(width * height, kBounded);
}

std::size_t EscapeGrid::bounded_count() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), kBounded));
}

double EscapeGrid::bounded_fraction() const {
  return static_cast<double>(bounded_count()) / static_cast<double>(cells_.size());
}

double EscapeGrid::bounded_area() const { return bounded_fraction() * meta_.region.area(); }

namespace {

/// Runs row_fn(j) for every row. Rows are claimed dynamically, but each row
/// only writes its own cells, so the result does not depend on scheduling.
template <typename RowFn>
void for_each_row(std::size_t height, unsigned threads, RowFn&& row_fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, height));
  if (threads <= 1) {
    for (std::size_t j = 0; j < height; ++j) row_fn(j);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t j = next.fetch_add(1); j < height; j = next.fetch_add(1)) row_fn(j);
    });
  }
}

std::uint32_t encode(const OrbitOutcome& o) { return o.escaped() ? o.n : EscapeGrid::kBounded; }

}  // namespace

EscapeGrid render_mandelbrot(const Region& region, std::size_t width, std::size_t height,
                             std::uint32_t depth, BoundednessVariant variant, RenderMode mode,
                             unsigned threads) {
  EscapeGrid grid(width, height, GridMeta{region, depth, variant, mode, Plane::Mandelbrot, std::nullopt});

  for_each_row(height, threads, [&](std::size_t j) {
    auto row = grid.row(j);
    for (std::size_t i = 0; i < width; ++i) {
      const Eigen::Vector2d p = pixel_center(region, width, height, i, j);
      const HyperParam c(p.x(), p.y());
      if (mode == RenderMode::Analytic) {
        row[i] = mandelbrot_analytic(c, variant) ? EscapeGrid::kBounded : 0;
      } else {
        row[i] = encode(MandelbrotProbe<double>(c, variant).run(depth));
      }
    }
  });
  return grid;
}

EscapeGrid render_julia(const HyperParam& c, const Region& region, std::size_t width, std::size_t height,
                        std::uint32_t depth, RenderMode mode, unsigned threads) {
  GridMeta meta{region, depth, BoundednessVariant::ComponentBounded, mode, Plane::Julia, c};
  EscapeGrid grid(width, height, std::move(meta));
  const JuliaProbe<double> probe(c);
  std::vector<std::size_t> undecided(height, 0);

  for_each_row(height, threads, [&](std::size_t j) {
    auto row = grid.row(j);
    for (std::size_t i = 0; i < width; ++i) {
      const Eigen::Vector2d p = pixel_center(region, width, height, i, j);
      const auto z = to_characteristic(HyperbolicNumber(p.x(), p.y()));
      if (mode == RenderMode::Analytic) {
        switch (probe.analytic(z, depth)) {
          case JuliaVerdict::In:
            row[i] = EscapeGrid::kBounded;
            break;
          case JuliaVerdict::Out:
            row[i] = 0;
            break;
          case JuliaVerdict::BoundedThroughDepth:
            row[i] = EscapeGrid::kBounded;
            ++undecided[j];
            break;
        }
      } else {
        row[i] = encode(probe.iterative(z, depth));
      }
    }
  });

  for (std::size_t n : undecided) grid.meta().undecided_pixels += n;
  return grid;
}

DisagreementReport diff_grids(const EscapeGrid& first, const EscapeGrid& second) {
  if (first.width() != second.width() || first.height() != second.height()) {
    throw std::invalid_argument("grids differ in dimensions");
  }
  if (!(first.meta().region == second.meta().region)) {
    throw std::invalid_argument("grids cover different regions");
  }
  DisagreementReport report;
  report.total_pixels = first.size();
  for_each_disagreement(first, second, [&](std::size_t i, std::size_t j) {
    ++report.disagree_count;
    if (report.samples.size() < DisagreementReport::kMaxSamples) {
      const Eigen::Vector2d p = first.center(i, j);
      report.samples.push_back({i, j, p.x(), p.y(), first.bounded(i, j), second.bounded(i, j)});
    }
  });
  report.disagree_fraction =
      static_cast<double>(report.disagree_count) / static_cast<double>(report.total_pixels);
  return report;
}

}  // namespace hyperdyn
