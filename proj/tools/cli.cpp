#include "cli.hpp"

#include <map>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperdyn/dynamics.hpp"
#include "hyperdyn/render.hpp"
#include "hyperdyn/verify.hpp"

namespace hyperdyn::cli {
namespace {

enum class Format { Ppm, Csv, Json };

struct RenderFlags {
  std::vector<double> region{-2.5, 2.5, -2.5, 2.5};
  std::vector<std::size_t> size{512, 512};
  std::uint32_t depth = 1000;
  std::string variant = "component";
  std::string mode = "iterative";
  std::string format = "ppm";
  std::string out_path;
  unsigned threads = 0;
};

struct ParamFlags {
  double a = 0.0;
  double b = 0.0;
};

struct OrbitFlags {
  double x = 0.0;
  double y = 0.0;
  double a = 0.0;
  double b = 0.0;
  std::size_t n = 0;
};

struct VerifyFlags {
  std::uint32_t depth = 2000;
  std::vector<std::size_t> size{2000, 2000};
  unsigned threads = 0;
};

const std::map<std::string, BoundednessVariant> kVariants{
    {"component", BoundednessVariant::ComponentBounded}, {"modulus", BoundednessVariant::ModulusBounded}};
const std::map<std::string, RenderMode> kModes{{"iterative", RenderMode::Iterative},
                                               {"analytic", RenderMode::Analytic}};
const std::map<std::string, Format> kFormats{{"ppm", Format::Ppm}, {"csv", Format::Csv}, {"json", Format::Json}};

/// Raised for flag combinations CLI11 cannot express; maps to exit 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void add_render_flags(CLI::App* cmd, RenderFlags& f, bool with_variant) {
  cmd->add_option("--region", f.region, "Window: xmin xmax ymin ymax")->expected(4);
  cmd->add_option("--size", f.size, "Grid: width height")->expected(2)->check(CLI::PositiveNumber);
  cmd->add_option("--depth", f.depth, "Iteration budget")->check(CLI::Range(1u, 1000000000u));
  if (with_variant) {
    cmd->add_option("--variant", f.variant, "component | modulus")->check(CLI::IsMember(kVariants));
  }
  cmd->add_option("--mode", f.mode, "iterative | analytic")->check(CLI::IsMember(kModes));
  cmd->add_option("--format", f.format, "ppm | csv | json")->check(CLI::IsMember(kFormats));
  cmd->add_option("--out", f.out_path, "Output file (csv/json default to standard output)");
  cmd->add_option("--threads", f.threads, "Worker threads (0 = all cores)");
}

Region make_region(const RenderFlags& f) {
  try {
    return Region(f.region[0], f.region[1], f.region[2], f.region[3]);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

HyperParam make_param(double a, double b) {
  try {
    return HyperParam(a, b);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("parameter: ") + e.what());
  }
}

Format format_of(const RenderFlags& f) { return kFormats.at(f.format); }
RenderMode mode_of(const RenderFlags& f) { return kModes.at(f.mode); }
BoundednessVariant variant_of(const RenderFlags& f) { return kVariants.at(f.variant); }

void validate_output(const RenderFlags& f) {
  if (format_of(f) == Format::Ppm && f.out_path.empty()) throw UsageError("--out is required for --format ppm");
}

/// Writes the grid; returns the stream the summary line belongs on.
std::ostream& emit_grid(const EscapeGrid& grid, const RenderFlags& f, std::ostream& out, std::ostream& err) {
  if (f.out_path.empty()) {
    out << (format_of(f) == Format::Csv ? encode_csv(grid) : encode_json(grid));
    return err;
  }
  switch (format_of(f)) {
    case Format::Ppm: write_ppm(grid, default_colormap(), f.out_path); break;
    case Format::Csv: write_csv(grid, f.out_path); break;
    case Format::Json: write_json(grid, f.out_path); break;
  }
  return out;
}

void print_summary_head(std::ostream& os, const EscapeGrid& grid) {
  os << "bounded_fraction=" << format_double(grid.bounded_fraction()) << " bounded=" << grid.bounded_count()
     << "/" << grid.size() << " depth=" << grid.meta().depth << " variant=" << to_string(grid.meta().variant)
     << " mode=" << to_string(grid.meta().mode);
}

int cmd_mandelbrot(const RenderFlags& f, std::ostream& out, std::ostream& err) {
  const Region region = make_region(f);
  validate_output(f);
  const auto grid = render_mandelbrot(region, f.size[0], f.size[1], f.depth, variant_of(f), mode_of(f), f.threads);
  std::ostream& summary = emit_grid(grid, f, out, err);
  print_summary_head(summary, grid);
  summary << "\n";
  return kExitOk;
}

int cmd_julia(const RenderFlags& f, const ParamFlags& p, std::ostream& out, std::ostream& err) {
  const HyperParam c = make_param(p.a, p.b);
  const Region region = make_region(f);
  validate_output(f);
  const auto grid = render_julia(c, region, f.size[0], f.size[1], f.depth, mode_of(f), f.threads);
  const auto cls = julia_classify(c);
  std::ostream& summary = emit_grid(grid, f, out, err);
  print_summary_head(summary, grid);
  summary << " class=" << to_string(cls.kind);
  if (cls.kind == JuliaKind::ConnectedRectangle) {
    summary << " half_widths=" << format_double(cls.half_width_x) << " " << format_double(cls.half_width_y);
  }
  if (mode_of(f) == RenderMode::Analytic) summary << " undecided=" << grid.meta().undecided_pixels;
  summary << "\n";
  return kExitOk;
}

int cmd_classify(const ParamFlags& p, std::ostream& out) {
  const HyperParam c = make_param(p.a, p.b);
  const auto cls = julia_classify(c);
  nlohmann::ordered_json doc;
  doc["a"] = c.a();
  doc["b"] = c.b();
  doc["c1"] = c.c1();
  doc["c2"] = c.c2();
  doc["in_mandelbrot_component"] = mandelbrot_analytic(c, BoundednessVariant::ComponentBounded);
  doc["in_mandelbrot_modulus"] = mandelbrot_analytic(c, BoundednessVariant::ModulusBounded);
  doc["julia_class"] = to_string(cls.kind);
  if (cls.kind == JuliaKind::ConnectedRectangle) {
    doc["half_widths"] = {cls.half_width_x, cls.half_width_y};
  } else {
    doc["half_widths"] = nullptr;
  }
  out << doc.dump() << "\n";
  return kExitOk;
}

int cmd_orbit(const OrbitFlags& f, std::ostream& out) {
  const HyperParam c = make_param(f.a, f.b);
  HyperbolicNumber z;
  try {
    z = HyperbolicNumber(f.x, f.y);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("start point: ") + e.what());
  }
  const auto points = orbit(z, c, f.n);
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto& p = points[k];
    const auto t = to_characteristic(p);
    out << k << ',' << format_double(p.x()) << ',' << format_double(p.y()) << ',' << format_double(t.X) << ','
        << format_double(t.Y) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const VerifyFlags& f, std::ostream& out) {
  VerifyOptions options;
  options.depth = f.depth;
  options.width = f.size[0];
  options.height = f.size[1];
  options.threads = f.threads;
  bool ok = true;
  for (const auto& r : run_grid_checks(options)) {
    out << to_string(r.status) << ' ' << r.name << " value=" << r.value << " threshold=" << r.threshold << " "
        << r.detail << "\n";
    ok = ok && r.status != CheckStatus::Fail;
  }
  out << (ok ? "all checks passed" : "some checks failed") << "\n";
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadratic dynamics over the hyperbolic numbers", "hyperdyn"};
  app.require_subcommand(1);

  RenderFlags mandel_flags;
  auto* mandel = app.add_subcommand("mandelbrot", "Render the hyperbolic Mandelbrot set over (a, b)");
  add_render_flags(mandel, mandel_flags, true);

  RenderFlags julia_flags;
  ParamFlags julia_param;
  auto* julia = app.add_subcommand("julia", "Render the filled Julia set of z^2 + c over (x, y)");
  add_render_flags(julia, julia_flags, false);
  julia->add_option("--a", julia_param.a, "Real part of c")->required();
  julia->add_option("--b", julia_param.b, "Hyperbolic part of c")->required();

  ParamFlags classify_param;
  auto* classify = app.add_subcommand("classify", "Print the analytic verdicts for c = a + j b as JSON");
  classify->add_option("--a", classify_param.a)->required();
  classify->add_option("--b", classify_param.b)->required();

  OrbitFlags orbit_flags;
  auto* orbit_cmd = app.add_subcommand("orbit", "Print the orbit of z under z^2 + c as CSV");
  orbit_cmd->add_option("--x", orbit_flags.x);
  orbit_cmd->add_option("--y", orbit_flags.y);
  orbit_cmd->add_option("--a", orbit_flags.a)->required();
  orbit_cmd->add_option("--b", orbit_flags.b)->required();
  orbit_cmd->add_option("--n", orbit_flags.n, "Number of steps")->required();

  VerifyFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "Cross-check analytic and iterative renders");
  verify->add_option("--depth", verify_flags.depth)->check(CLI::Range(1u, 1000000000u));
  verify->add_option("--size", verify_flags.size)->expected(2)->check(CLI::PositiveNumber);
  verify->add_option("--threads", verify_flags.threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*mandel) return cmd_mandelbrot(mandel_flags, out, err);
    if (*julia) return cmd_julia(julia_flags, julia_param, out, err);
    if (*classify) return cmd_classify(classify_param, out);
    if (*orbit_cmd) return cmd_orbit(orbit_flags, out);
    if (*verify) return cmd_verify(verify_flags, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hyperdyn::cli
