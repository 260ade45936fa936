#include "swimlab/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "swimlab/error.hpp"

namespace swimlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void project(const Vec3& p, ProjectionPlane plane, double& u, double& v) {
  switch (plane) {
    case ProjectionPlane::XY: u = p.x; v = p.y; return;
    case ProjectionPlane::XZ: u = p.x; v = p.z; return;
    case ProjectionPlane::YZ: u = p.y; v = p.z; return;
  }
}

std::uint8_t quantize(double c) {
  return static_cast<std::uint8_t>(std::lround(255.0 * std::clamp(c, 0.0, 1.0)));
}

void deposit(Image& img, int x, int y, Rgb c, Exposure exposure) {
  if (x < 0 || y < 0 || x >= img.width || y >= img.height) return;
  const std::size_t i = 3 * (static_cast<std::size_t>(y) * img.width + x);
  if (exposure == Exposure::Max) {
    img.pixels[i] = std::max(img.pixels[i], c.r);
    img.pixels[i + 1] = std::max(img.pixels[i + 1], c.g);
    img.pixels[i + 2] = std::max(img.pixels[i + 2], c.b);
  } else {
    img.pixels[i] = static_cast<std::uint8_t>(std::min(255, img.pixels[i] + c.r));
    img.pixels[i + 1] = static_cast<std::uint8_t>(std::min(255, img.pixels[i + 1] + c.g));
    img.pixels[i + 2] = static_cast<std::uint8_t>(std::min(255, img.pixels[i + 2] + c.b));
  }
}

double component_value(const Phasor& p, Component c) {
  return c == Component::Re ? p.real() : p.imag();
}

}  // namespace

void RenderConfig::validate() const {
  if (width < 1 || height < 1)
    throw Error(Errc::InvalidValue, "image dimensions must be >= 1");
  if (!(max_u > min_u) || !(max_v > min_v))
    throw Error(Errc::InvalidValue, "render extent must be positive");
  if (splat_radius < 0) throw Error(Errc::InvalidValue, "splat_radius must be >= 0");
  if (!normalization.global_max && !(normalization.fixed > 0.0))
    throw Error(Errc::InvalidValue, "fixed normalization value must be > 0");
}

Rgb phasor_to_rgb(const Phasor& value, double norm) {
  if (!(norm > 0.0)) throw Error(Errc::InvalidArgument, "normalization must be > 0");
  const double mag = std::abs(value);
  const double brightness = std::clamp(mag / norm, 0.0, 1.0);
  if (brightness == 0.0) return {0, 0, 0};

  double phase = std::atan2(value.imag(), value.real());
  if (phase < 0.0) phase += kTwoPi;
  // hue in sextants: phase 0 = red, 2pi/3 = green, 4pi/3 = blue
  const double h = phase / (std::numbers::pi / 3.0);
  const int sector = std::min(5, static_cast<int>(h));
  const double f = h - sector;
  const double v = brightness;
  const double q = v * (1.0 - f);
  const double t = v * f;
  switch (sector) {
    case 0: return {quantize(v), quantize(t), 0};
    case 1: return {quantize(q), quantize(v), 0};
    case 2: return {0, quantize(v), quantize(t)};
    case 3: return {0, quantize(q), quantize(v)};
    case 4: return {quantize(t), 0, quantize(v)};
    default: return {quantize(v), 0, quantize(q)};
  }
}

Image rasterize(const FieldCloud& cloud, const RenderConfig& cfg) {
  cfg.validate();
  if (cloud.samples.empty()) throw Error(Errc::EmptyFrame, "empty cloud");

  const double du = cfg.max_u - cfg.min_u;
  const double dv = cfg.max_v - cfg.min_v;

  double norm = cfg.normalization.fixed;
  std::size_t inside = 0;
  if (cfg.normalization.global_max) {
    double max_mag = 0.0;
    for (const auto& s : cloud.samples) {
      double u, v;
      project(s.position, cfg.plane, u, v);
      if (u < cfg.min_u || u > cfg.max_u || v < cfg.min_v || v > cfg.max_v) continue;
      ++inside;
      max_mag = std::max(max_mag, std::abs(s.value));
    }
    norm = max_mag > 0.0 ? max_mag : 1.0;
  } else {
    for (const auto& s : cloud.samples) {
      double u, v;
      project(s.position, cfg.plane, u, v);
      if (u >= cfg.min_u && u <= cfg.max_u && v >= cfg.min_v && v <= cfg.max_v) ++inside;
    }
  }
  if (inside == 0)
    throw Error(Errc::EmptyFrame, "no cloud sample falls inside the render extent");

  Image img{cfg.width, cfg.height,
            std::vector<std::uint8_t>(3 * static_cast<std::size_t>(cfg.width) * cfg.height, 0)};
  const int r = cfg.splat_radius;
  for (const auto& s : cloud.samples) {
    double u, v;
    project(s.position, cfg.plane, u, v);
    if (u < cfg.min_u || u > cfg.max_u || v < cfg.min_v || v > cfg.max_v) continue;
    const int px = std::min(cfg.width - 1,
                            static_cast<int>((u - cfg.min_u) / du * cfg.width));
    const int py_up = std::min(cfg.height - 1,
                               static_cast<int>((v - cfg.min_v) / dv * cfg.height));
    const int py = cfg.height - 1 - py_up;  // v grows upward, rows grow downward
    const Rgb c = phasor_to_rgb(s.value, norm);
    for (int dy = -r; dy <= r; ++dy)
      for (int dx = -r; dx <= r; ++dx)
        if (dx * dx + dy * dy <= r * r) deposit(img, px + dx, py + dy, c, cfg.exposure);
  }
  return img;
}

std::vector<Image> animate(const FieldCloud& cloud, const RenderConfig& cfg, int frames,
                           double delta_phase) {
  if (frames < 1) throw Error(Errc::InvalidArgument, "need at least one frame");
  std::vector<Image> out;
  out.reserve(frames);
  FieldCloud rotated = cloud;
  for (int j = 0; j < frames; ++j) {
    // reduce mod 2*pi so a whole number of turns lands exactly on identity
    const double angle = std::fmod(j * delta_phase, kTwoPi);
    const Phasor rot{std::cos(angle), std::sin(angle)};
    for (std::size_t i = 0; i < cloud.samples.size(); ++i)
      rotated.samples[i].value = cloud.samples[i].value * rot;
    out.push_back(rasterize(rotated, cfg));
  }
  return out;
}

Image swim_dotgraph(const FieldCloud& cloud, int height, Component component) {
  if (height < 1) throw Error(Errc::InvalidValue, "dotgraph height must be >= 1");
  const auto& samples = cloud.samples;
  if (samples.empty()) throw Error(Errc::EmptyFrame, "empty cloud");

  // the cloud must come from a linear sweep
  if (samples.size() >= 3) {
    const Vec3 axis = samples.back().position - samples.front().position;
    const double scale = std::max(norm(axis), 1e-30);
    for (const auto& s : samples) {
      const Vec3 d = s.position - samples.front().position;
      if (norm(cross(d, axis)) / scale > 1e-9)
        throw Error(Errc::PathKindMismatch, "dot-graph requires a linear-path cloud");
    }
  }

  double max_abs = 0.0;
  for (const auto& s : samples)
    max_abs = std::max(max_abs, std::abs(component_value(s.value, component)));

  const int width = static_cast<int>(samples.size());
  Image img{width, height,
            std::vector<std::uint8_t>(3 * static_cast<std::size_t>(width) * height, 0)};
  for (int x = 0; x < width; ++x) {
    const double val = component_value(samples[x].value, component);
    const double t = max_abs > 0.0 ? val / max_abs : 0.0;  // [-1, 1]
    const int y = static_cast<int>(std::lround(0.5 * (1.0 - t) * (height - 1)));
    const std::size_t i = 3 * (static_cast<std::size_t>(y) * width + x);
    img.pixels[i] = img.pixels[i + 1] = img.pixels[i + 2] = 255;
  }
  return img;
}

std::string ppm_to_string(const Image& image) {
  char header[64];
  std::snprintf(header, sizeof header, "P6\n%d %d\n255\n", image.width, image.height);
  std::string out = header;
  out.append(reinterpret_cast<const char*>(image.pixels.data()), image.pixels.size());
  return out;
}

void write_ppm(const Image& image, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot open " + file.string() + " for writing");
  const std::string data = ppm_to_string(image);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(Errc::IoError, "short write to " + file.string());
}

void write_frames(const std::vector<Image>& frames, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  char name[32];
  for (std::size_t j = 0; j < frames.size(); ++j) {
    std::snprintf(name, sizeof name, "frame_%04zu.ppm", j);
    write_ppm(frames[j], dir / name);
  }
}

}  // namespace swimlab
