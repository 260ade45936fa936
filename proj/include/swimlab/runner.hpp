#pragma once
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "swimlab/config.hpp"
#include "swimlab/error.hpp"

namespace swimlab {

enum class Mode { Simulate, Render, Animate, Analyze, Sightfield };

struct RunOptions {
  Mode mode = Mode::Simulate;
  std::filesystem::path out_dir;
  int frames = 12;
  std::optional<double> delta_phase;      // default 2*pi/frames
  std::optional<std::uint64_t> seed;      // overrides config seed
  std::optional<unsigned> workers;        // overrides config workers
  bool quiet = false;                     // suppress the stdout report echo
};

// Execute a validated config: acquire, then render / animate / analyze /
// sightfield per mode, writing cloud.swim, PPM frames, report.txt and
// config.normalized.json under out_dir. Throws swimlab::Error on failure.
void run(RunConfig cfg, const RunOptions& opt);

// Exit-code mapping for the CLI: 0 success, 2 config, 3 acquisition,
// 4 render, 5 analysis.
int exit_code_for(Errc code);

}  // namespace swimlab
