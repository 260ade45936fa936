#pragma once
#include <cstdint>
#include <filesystem>
#include <vector>

#include "swimlab/scan.hpp"

namespace swimlab {

enum class ProjectionPlane { XY, XZ, YZ };
enum class Exposure { Additive, Max };
enum class Component { Re, Im };

struct Normalization {
  bool global_max = true;  // per-cloud max magnitude; otherwise fixed value
  double fixed = 1.0;
};

struct RenderConfig {
  int width = 0;
  int height = 0;
  ProjectionPlane plane = ProjectionPlane::XY;
  double min_u = 0.0, min_v = 0.0;  // meters, orthographic extent
  double max_u = 0.0, max_v = 0.0;
  Exposure exposure = Exposure::Additive;
  Normalization normalization;
  int splat_radius = 1;  // pixels

  void validate() const;
};

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major RGB, row 0 at the top

  Rgb at(int x, int y) const {
    const std::size_t i = 3 * (static_cast<std::size_t>(y) * width + x);
    return {pixels[i], pixels[i + 1], pixels[i + 2]};
  }
};

// Phase to hue (0 rad = red, linear around the wheel), saturation 1,
// brightness = clamp(|value|/norm, 0, 1). A zero phasor renders black.
Rgb phasor_to_rgb(const Phasor& value, double norm);

// Orthographic long-exposure compositing of the cloud into an image.
Image rasterize(const FieldCloud& cloud, const RenderConfig& cfg);

// Frame j is the cloud with every phasor multiplied by exp(i j delta_phase).
// The rotation angle is reduced mod 2*pi so a full turn reproduces frame 0
// byte for byte.
std::vector<Image> animate(const FieldCloud& cloud, const RenderConfig& cfg, int frames,
                           double delta_phase);

// One column per sample of a collinear cloud; the selected component is drawn
// as a single lit pixel per column, -max at the bottom row, +max at the top.
Image swim_dotgraph(const FieldCloud& cloud, int height, Component component);

// Binary PPM (P6, maxval 255).
void write_ppm(const Image& image, const std::filesystem::path& file);
std::string ppm_to_string(const Image& image);

// frame_0000.ppm, frame_0001.ppm, ... under dir.
void write_frames(const std::vector<Image>& frames, const std::filesystem::path& dir);

}  // namespace swimlab
