#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hyperdyn/dynamics.hpp"

namespace hyperdyn {

/// Axis-aligned window. Axes are (a, b) for parameter planes and (x, y)
/// for dynamical planes.
struct Region {
  double xmin;
  double xmax;
  double ymin;
  double ymax;

  /// Throws std::invalid_argument unless finite with xmin < xmax, ymin < ymax.
  Region(double xmin, double xmax, double ymin, double ymax);

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  double area() const { return width() * height(); }

  friend bool operator==(const Region&, const Region&) = default;
};

/// Center of pixel (i, j); row 0 is the top of the window.
Eigen::Vector2d pixel_center(const Region& region, std::size_t width, std::size_t height, std::size_t i,
                             std::size_t j);

enum class RenderMode { Iterative, Analytic };
enum class Plane { Mandelbrot, Julia };

std::string_view to_string(RenderMode mode);
std::string_view to_string(Plane plane);

struct GridMeta {
  Region region;
  std::uint32_t depth;
  BoundednessVariant variant = BoundednessVariant::ComponentBounded;
  RenderMode mode = RenderMode::Iterative;
  Plane plane = Plane::Mandelbrot;
  std::optional<HyperParam> parameter;  // Julia renders only
  /// Analytic Julia pixels whose Cantor factor did not escape within depth;
  /// they are stored as bounded.
  std::size_t undecided_pixels = 0;
};

/// Row-major raster of per-pixel escape records.
class EscapeGrid {
 public:
  static constexpr std::uint32_t kBounded = UINT32_MAX;

  EscapeGrid(std::size_t width, std::size_t height, GridMeta meta);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t size() const { return cells_.size(); }
  const GridMeta& meta() const { return meta_; }
  GridMeta& meta() { return meta_; }

  std::uint32_t& at(std::size_t i, std::size_t j) { return cells_[j * width_ + i]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return cells_[j * width_ + i]; }
  std::span<std::uint32_t> row(std::size_t j) { return {cells_.data() + j * width_, width_}; }
  std::span<const std::uint32_t> cells() const { return cells_; }

  bool bounded(std::size_t i, std::size_t j) const { return at(i, j) == kBounded; }
  std::size_t bounded_count() const;
  double bounded_fraction() const;
  /// bounded_fraction() times the window area.
  double bounded_area() const;

  Eigen::Vector2d center(std::size_t i, std::size_t j) const {
    return pixel_center(meta_.region, width_, height_, i, j);
  }

 private:
  std::size_t width_;
  std::size_t height_;
  GridMeta meta_;
  std::vector<std::uint32_t> cells_;
};

/// threads == 0 picks std::thread::hardware_concurrency().
EscapeGrid render_mandelbrot(const Region& region, std::size_t width, std::size_t height,
                             std::uint32_t depth, BoundednessVariant variant, RenderMode mode,
                             unsigned threads = 0);

EscapeGrid render_julia(const HyperParam& c, const Region& region, std::size_t width, std::size_t height,
                        std::uint32_t depth, RenderMode mode, unsigned threads = 0);

struct Disagreement {
  std::size_t i;
  std::size_t j;
  double x;
  double y;
  bool first_bounded;
  bool second_bounded;
};

struct DisagreementReport {
  static constexpr std::size_t kMaxSamples = 16;

  std::size_t total_pixels = 0;
  std::size_t disagree_count = 0;
  double disagree_fraction = 0.0;
  std::vector<Disagreement> samples;
};

/// Compares bounded-vs-escaped verdicts. Throws std::invalid_argument on a
/// dimension or region mismatch.
DisagreementReport diff_grids(const EscapeGrid& first, const EscapeGrid& second);

/// Visits every disagreeing pixel, not just the reported sample.
template <typename Visitor>
void for_each_disagreement(const EscapeGrid& first, const EscapeGrid& second, Visitor&& visit) {
  for (std::size_t j = 0; j < first.height(); ++j) {
    for (std::size_t i = 0; i < first.width(); ++i) {
      if (first.bounded(i, j) != second.bounded(i, j)) visit(i, j);
    }
  }
}

// Colors and file output.

using Rgb = std::array<std::uint8_t, 3>;
using Colormap = std::array<Rgb, 256>;

const Colormap& default_colormap();

/// floor(255 * n / depth) for n <= depth.
std::size_t colormap_index(std::uint32_t n, std::uint32_t depth);

std::string encode_ppm(const EscapeGrid& grid, const Colormap& colormap = default_colormap());
std::string encode_csv(const EscapeGrid& grid);
std::string encode_json(const EscapeGrid& grid);

/// Shortest round-trip decimal form of v.
std::string format_double(double v);

/// Throw std::runtime_error naming the path on I/O failure.
void write_ppm(const EscapeGrid& grid, const Colormap& colormap, const std::filesystem::path& path);
void write_csv(const EscapeGrid& grid, const std::filesystem::path& path);
void write_json(const EscapeGrid& grid, const std::filesystem::path& path);

}  // namespace hyperdyn
