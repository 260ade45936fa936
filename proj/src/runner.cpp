#include "swimlab/runner.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include "swimlab/analysis.hpp"
#include "swimlab/cloud_io.hpp"
#include "swimlab/error.hpp"

namespace swimlab {

namespace {

namespace fs = std::filesystem;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_text(const fs::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot open " + file.string() + " for writing");
  out << text;
  if (!out) throw Error(Errc::IoError, "short write to " + file.string());
}

FieldCloud acquire(const RunConfig& cfg, const ScanPath& path) {
  if (!cfg.scene) throw Error(Errc::MissingField, "missing required field: scene");
  if (cfg.lockin) return acquire_lockin(*cfg.scene, path, *cfg.lockin, cfg.workers);
  return acquire_ideal(*cfg.scene, path, cfg.workers);
}

std::string analyze_wavelength(const RunConfig& cfg, const FieldCloud& cloud) {
  const AnalysisSpec& spec = *cfg.analysis;
  const double lambda = extract_wavelength(cloud, spec.component);
  const double length = norm(cloud.samples.back().position - cloud.samples.front().position);
  const double speed = propagation_speed(lambda, cloud.frequency);

  std::string report;
  report += "wavelength=" + fmt(lambda) + "\n";
  report += "cycles=" + fmt(length / lambda) + "\n";
  report += "frequency=" + fmt(cloud.frequency) + "\n";
  report += "speed=" + fmt(speed) + "\n";
  if (spec.temperature_c) {
    const double theory = theoretical_sound_speed(*spec.temperature_c);
    report += "theory=" + fmt(theory) + "\n";
    report += "relative_error=" + fmt(std::abs(speed - theory) / theory) + "\n";
  }
  return report;
}

// Two-speaker experiment: per separation, rebuild the scene with a symmetric
// source pair, scan a line parallel to the baseline at the configured
// distance, and measure the fringe spacing.
std::string run_fringe_experiment(const RunConfig& cfg, const fs::path& out_dir) {
  const FringeSpec& fr = *cfg.analysis->fringe;
  if (!cfg.scene) throw Error(Errc::MissingField, "missing required field: scene");
  const Source& proto = cfg.scene->sources.front();
  const double lambda = wavelength(proto.frequency, cfg.scene->medium);

  std::string report;
  report += "separations=" + std::to_string(fr.separations.size()) + "\n";
  std::vector<double> spacings;
  for (std::size_t i = 0; i < fr.separations.size(); ++i) {
    const double d = fr.separations[i];
    Scene scene = *cfg.scene;
    scene.sources.clear();
    Source s = proto;
    s.position = {-0.5 * d, 0.0, 0.0};
    scene.sources.push_back(s);
    s.position = {0.5 * d, 0.0, 0.0};
    scene.sources.push_back(s);

    const double dwell = cfg.path && cfg.path->dwell > 0.0 ? cfg.path->dwell
                         : cfg.lockin ? default_dwell(*cfg.lockin)
                                      : 1e-3;
    const ScanPath line = linear_path({-fr.halfwidth, fr.distance, 0.0},
                                      {fr.halfwidth, fr.distance, 0.0}, fr.points, dwell);
    const FieldCloud cloud = cfg.lockin
                                 ? acquire_lockin(scene, line, *cfg.lockin, cfg.workers)
                                 : acquire_ideal(scene, line, cfg.workers);
    const std::string tag = std::to_string(i + 1);
    write_cloud(cloud, out_dir / ("fringe_" + tag + ".swim"));

    const FringeMeasurement m = fringe_spacing(cloud, fr.distance, d);
    spacings.push_back(m.spacing);
    report += "separation_" + tag + "=" + fmt(d) + "\n";
    report += "spacing_" + tag + "=" + fmt(m.spacing) + "\n";
    report += "predicted_" + tag + "=" + fmt(lambda * fr.distance / d) + "\n";
    report += "peaks_" + tag + "=" + std::to_string(m.peak_count) + "\n";
    report += "near_field_" + tag + "=" + (m.near_field ? "1" : "0") + "\n";

    if (cfg.render) {
      // illustrative 2D view of the same scene over the render extent
      const RenderConfig& r = cfg.render->cfg;
      Vec3 lo, hi;
      std::array<std::size_t, 3> counts{1, 1, 1};
      switch (r.plane) {
        case ProjectionPlane::XY:
          lo = {r.min_u, r.min_v, 0.0};
          hi = {r.max_u, r.max_v, 0.0};
          counts = {static_cast<std::size_t>(r.width), static_cast<std::size_t>(r.height), 1};
          break;
        case ProjectionPlane::XZ:
          lo = {r.min_u, 0.0, r.min_v};
          hi = {r.max_u, 0.0, r.max_v};
          counts = {static_cast<std::size_t>(r.width), 1, static_cast<std::size_t>(r.height)};
          break;
        case ProjectionPlane::YZ:
          lo = {0.0, r.min_u, r.min_v};
          hi = {0.0, r.max_u, r.max_v};
          counts = {1, static_cast<std::size_t>(r.width), static_cast<std::size_t>(r.height)};
          break;
      }
      const ScanPath grid = raster_path(lo, hi, counts, 1e-3);
      const FieldCloud plane_cloud = acquire_ideal(scene, grid, cfg.workers);
      write_ppm(rasterize(plane_cloud, r), out_dir / ("fringe_" + tag + ".ppm"));
    }
  }
  if (spacings.size() >= 2)
    report += "spacing_ratio=" + fmt(spacings.front() / spacings.back()) + "\n";
  return report;
}

std::string run_sightfield(const RunConfig& cfg, const fs::path& out_dir) {
  if (!cfg.sightfield) throw Error(Errc::MissingField, "missing required field: sightfield");
  if (!cfg.path) throw Error(Errc::MissingField, "missing required field: path");
  const ScanPath path = cfg.path->build(std::nullopt);
  const FieldCloud cloud =
      sweep_sightfield(cfg.sightfield->camera, path, cfg.sightfield->feedback);
  write_cloud(cloud, out_dir / "cloud.swim");

  std::size_t lit = 0;
  for (const auto& s : cloud.samples)
    if (s.value.real() > 0.0) ++lit;

  if (cfg.render) write_ppm(rasterize(cloud, cfg.render->cfg), out_dir / "sightfield.ppm");

  std::string report;
  report += "poses=" + std::to_string(cloud.samples.size()) + "\n";
  report += "lit=" + std::to_string(lit) + "\n";
  report += "lit_fraction=" +
            fmt(static_cast<double>(lit) / static_cast<double>(cloud.samples.size())) + "\n";
  return report;
}

}  // namespace

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::MissingField:
    case Errc::UnknownField:
    case Errc::InvalidValue:
      return 2;
    case Errc::EmptyFrame:
    case Errc::PathKindMismatch:
      return 4;
    case Errc::NoOscillation:
    case Errc::InsufficientFringes:
    case Errc::InvalidArgument:
      return 5;
    case Errc::IoError:
      return 1;
    default:
      return 3;  // acquisition-side failures
  }
}

void run(RunConfig cfg, const RunOptions& opt) {
  if (opt.seed) {
    cfg.seed = *opt.seed;
    if (cfg.scene) cfg.scene->seed = *opt.seed;
  }
  if (opt.workers) cfg.workers = std::max(1u, *opt.workers);

  std::error_code ec;
  fs::create_directories(opt.out_dir, ec);
  if (ec) throw Error(Errc::IoError, "cannot create " + opt.out_dir.string());
  write_text(opt.out_dir / "config.normalized.json", dump_config(cfg));

  std::string report;
  if (opt.mode == Mode::Sightfield) {
    report = run_sightfield(cfg, opt.out_dir);
  } else if (opt.mode == Mode::Analyze && cfg.analysis && cfg.analysis->fringe) {
    report = run_fringe_experiment(cfg, opt.out_dir);
  } else {
    if (!cfg.path) throw Error(Errc::MissingField, "missing required field: path");
    const ScanPath path = cfg.path->build(cfg.lockin);
    const FieldCloud cloud = acquire(cfg, path);
    write_cloud(cloud, opt.out_dir / "cloud.swim");

    switch (opt.mode) {
      case Mode::Simulate:
        break;
      case Mode::Render: {
        if (!cfg.render) throw Error(Errc::MissingField, "missing required field: render");
        const Image img = cfg.render->style == RenderStyle::Dotgraph
                              ? swim_dotgraph(cloud, cfg.render->cfg.height,
                                              cfg.render->component)
                              : rasterize(cloud, cfg.render->cfg);
        write_ppm(img, opt.out_dir / "image.ppm");
        break;
      }
      case Mode::Animate: {
        if (!cfg.render) throw Error(Errc::MissingField, "missing required field: render");
        if (opt.frames < 1) throw Error(Errc::InvalidValue, "frames must be >= 1");
        const double delta =
            opt.delta_phase.value_or(2.0 * std::numbers::pi / opt.frames);
        const auto frames = animate(cloud, cfg.render->cfg, opt.frames, delta);
        write_frames(frames, opt.out_dir / "frames");
        break;
      }
      case Mode::Analyze: {
        if (!cfg.analysis)
          throw Error(Errc::MissingField, "missing required field: analysis");
        report = analyze_wavelength(cfg, cloud);
        break;
      }
      default:
        break;
    }
  }

  if (!report.empty()) {
    write_text(opt.out_dir / "report.txt", report);
    if (!opt.quiet) std::cout << report;
  }
}

}  // namespace swimlab
