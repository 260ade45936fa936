// swimlab: simulate coherent wave fields, lock-in acquisition, phase-colored
// rendering and the camera-sightfield sweep from JSON run configurations.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "swimlab/config.hpp"
#include "swimlab/error.hpp"
#include "swimlab/recipes.hpp"
#include "swimlab/runner.hpp"

namespace {

std::string read_file(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw swimlab::Error(swimlab::Errc::IoError, "cannot open " + file);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct CommonArgs {
  std::string config_file;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_file, "JSON run configuration")->required();
  cmd->add_option("--out", args.out_dir, "output directory");
  cmd->add_option("--seed", [&args](const std::vector<std::string>& v) {
        args.seed = std::stoull(v.front());
        return true;
      }, "override the config seed");
  cmd->add_option("--workers", [&args](const std::vector<std::string>& v) {
        args.workers = static_cast<unsigned>(std::stoul(v.front()));
        return true;
      }, "worker threads for pose-level parallelism");
}

int execute(const std::string& config_text, swimlab::RunOptions opt) {
  try {
    swimlab::RunConfig cfg = swimlab::parse_config(config_text);
    swimlab::run(std::move(cfg), opt);
    return 0;
  } catch (const swimlab::Error& e) {
    const int code = swimlab::exit_code_for(e.code());
    std::cerr << "error code=" << swimlab::errc_name(e.code()) << " exit=" << code
              << " message=\"" << e.what() << "\"\n";
    return code;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"swimlab: phase-coherent wave-field imaging simulator"};
  app.require_subcommand(1);

  CommonArgs args;
  int frames = 12;
  std::optional<double> delta_phase;
  std::string recipe_name;
  std::string recipe_out = "out";
  std::optional<std::uint64_t> recipe_seed;
  std::optional<unsigned> recipe_workers;

  auto* simulate = app.add_subcommand("simulate", "acquire a field point cloud");
  auto* render = app.add_subcommand("render", "acquire and render one image");
  auto* animate = app.add_subcommand("animate", "acquire and render a frame sequence");
  auto* analyze = app.add_subcommand("analyze", "acquire and extract wave measurements");
  auto* sightfield = app.add_subcommand("sightfield", "sweep a bulb through a camera's view");
  for (auto* cmd : {simulate, render, animate, analyze, sightfield}) add_common(cmd, args);
  animate->add_option("--frames", frames, "number of frames");
  animate->add_option("--delta", [&delta_phase](const std::vector<std::string>& v) {
        delta_phase = std::stod(v.front());
        return true;
      }, "per-frame phase rotation in radians (default 2*pi/frames)");

  auto* recipe = app.add_subcommand("recipe", "run a bundled experiment reproduction");
  recipe->add_option("name", recipe_name, "recipe name, or 'list'")->required();
  recipe->add_option("--out", recipe_out, "output directory");
  recipe->add_option("--seed", [&recipe_seed](const std::vector<std::string>& v) {
        recipe_seed = std::stoull(v.front());
        return true;
      }, "override the recipe seed");
  recipe->add_option("--workers", [&recipe_workers](const std::vector<std::string>& v) {
        recipe_workers = static_cast<unsigned>(std::stoul(v.front()));
        return true;
      }, "worker threads");

  CLI11_PARSE(app, argc, argv);

  using swimlab::Mode;
  swimlab::RunOptions opt;
  opt.frames = frames;
  opt.delta_phase = delta_phase;

  try {
    if (recipe->parsed()) {
      if (recipe_name == "list") {
        for (const auto& name : swimlab::recipe_names()) std::cout << name << "\n";
        return 0;
      }
      if (!swimlab::is_recipe(recipe_name)) {
        std::cerr << "error code=InvalidValue exit=2 message=\"unknown recipe: "
                  << recipe_name << "\"\n";
        return 2;
      }
      opt.mode = swimlab::recipe_mode(recipe_name);
      opt.out_dir = recipe_out;
      opt.seed = recipe_seed;
      opt.workers = recipe_workers;
      return execute(swimlab::recipe_config(recipe_name), opt);
    }

    opt.mode = simulate->parsed()    ? Mode::Simulate
               : render->parsed()    ? Mode::Render
               : animate->parsed()   ? Mode::Animate
               : analyze->parsed()   ? Mode::Analyze
                                     : Mode::Sightfield;
    opt.out_dir = args.out_dir;
    opt.seed = args.seed;
    opt.workers = args.workers;
    return execute(read_file(args.config_file), opt);
  } catch (const swimlab::Error& e) {
    const int code = swimlab::exit_code_for(e.code());
    std::cerr << "error code=" << swimlab::errc_name(e.code()) << " exit=" << code
              << " message=\"" << e.what() << "\"\n";
    return code;
  }
}
