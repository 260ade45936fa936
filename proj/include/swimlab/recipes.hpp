#pragma once
#include <string>
#include <vector>

#include "swimlab/runner.hpp"

namespace swimlab {

// Bundled end-to-end configurations: fig5-radar, fig7-swim, fig8-darkroom,
// fig11-fringes, fig4-sightfield.
std::vector<std::string> recipe_names();
bool is_recipe(const std::string& name);
std::string recipe_config(const std::string& name);  // JSON text
Mode recipe_mode(const std::string& name);

}  // namespace swimlab
