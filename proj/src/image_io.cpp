#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

#include "hyperdyn/render.hpp"

namespace hyperdyn {

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("cannot format double");
  return {buf, end};
}

std::string encode_ppm(const EscapeGrid& grid, const Colormap& colormap) {
  std::string header = "P6\n" + std::to_string(grid.width()) + " " + std::to_string(grid.height()) + "\n255\n";
  std::string out;
  out.reserve(header.size() + grid.size() * 3);
  out += header;
  const std::uint32_t depth = grid.meta().depth;
  for (std::uint32_t cell : grid.cells()) {
    Rgb rgb{0, 0, 0};
    if (cell != EscapeGrid::kBounded) rgb = colormap[colormap_index(cell, depth)];
    out.append(reinterpret_cast<const char*>(rgb.data()), rgb.size());
  }
  return out;
}

std::string encode_csv(const EscapeGrid& grid) {
  std::string out = "i,j,x,y,escaped,step\n";
  for (std::size_t j = 0; j < grid.height(); ++j) {
    for (std::size_t i = 0; i < grid.width(); ++i) {
      const Eigen::Vector2d p = grid.center(i, j);
      out += std::to_string(i);
      out += ',';
      out += std::to_string(j);
      out += ',';
      out += format_double(p.x());
      out += ',';
      out += format_double(p.y());
      if (grid.bounded(i, j)) {
        out += ",false,\n";
      } else {
        out += ",true,";
        out += std::to_string(grid.at(i, j));
        out += '\n';
      }
    }
  }
  return out;
}

std::string encode_json(const EscapeGrid& grid) {
  const GridMeta& meta = grid.meta();
  nlohmann::ordered_json doc;
  doc["plane"] = to_string(meta.plane);
  doc["mode"] = to_string(meta.mode);
  doc["variant"] = to_string(meta.variant);
  doc["depth"] = meta.depth;
  doc["width"] = grid.width();
  doc["height"] = grid.height();
  doc["region"] = {meta.region.xmin, meta.region.xmax, meta.region.ymin, meta.region.ymax};
  if (meta.parameter) {
    doc["parameter"] = {{"a", meta.parameter->a()}, {"b", meta.parameter->b()}};
  } else {
    doc["parameter"] = nullptr;
  }
  doc["bounded_fraction"] = grid.bounded_fraction();
  doc["undecided_pixels"] = meta.undecided_pixels;
  auto steps = nlohmann::ordered_json::array();
  for (std::uint32_t cell : grid.cells()) {
    if (cell == EscapeGrid::kBounded) {
      steps.push_back(nullptr);
    } else {
      steps.push_back(cell);
    }
  }
  doc["steps"] = std::move(steps);
  return doc.dump() + "\n";
}

namespace {

void write_bytes(const std::string& bytes, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

void write_ppm(const EscapeGrid& grid, const Colormap& colormap, const std::filesystem::path& path) {
  write_bytes(encode_ppm(grid, colormap), path);
}

void write_csv(const EscapeGrid& grid, const std::filesystem::path& path) {
  write_bytes(encode_csv(grid), path);
}

void write_json(const EscapeGrid& grid, const std::filesystem::path& path) {
  write_bytes(encode_json(grid), path);
}

}  // namespace hyperdyn
