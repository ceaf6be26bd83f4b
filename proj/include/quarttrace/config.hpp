#pragma once

#include <string>

#include <quarttrace/model.hpp>

namespace qt {

// Everything a run needs, parsed from one INI-style file with sections
// [operator], [potential], [solver].
struct RunConfig {
  GammaLaw law;
  double alpha = 0.25;
  int modes = 1;
  PotentialSpec potential;
  SolverConfig solver;

  std::vector<ModeSpec> mode_list() const { return build_modes(law, alpha, modes); }
};

RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(const std::string& text);

}  // namespace qt
