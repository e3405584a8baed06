#pragma once

#include <iosfwd>
#include <string>

#include "ptwave/regimes.hpp"

namespace ptwave::cli {

// Everything a subcommand needs, collected from flags and an optional
// key=value config file (flags win). E and rho default to 1 so plain
// --alpha/--beta runs work in dimensionless units.
struct run_config {
  double alpha = 0.0;
  double beta = 0.0;
  double young = 1.0;
  double density = 1.0;
  double velocity = 0.0;
  kinetics kinetics_request = kinetics::auto_select;
  std::string format;  // "csv" or "text"; empty means the command's default
  int samples = 256;
  double time = 1.0;
  double xmax = 0.0;  // nonpositive means auto (fastest edge plus margin)
  double cd_phi_max = 0.0;
  std::string out_path;
  std::string solution_path;  // validate: check a saved solve block instead
};

// Parses argv and dispatches to one of the subcommands
// thresholds | solve | profile | locus | validate, writing to out/err.
// Exit codes: 0 success, 2 configuration or validation error, 3 solver
// regime or kinetics error, 4 validation-suite failure.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

int cmd_thresholds(const run_config& cfg, std::ostream& out);
int cmd_solve(const run_config& cfg, std::ostream& out);
int cmd_profile(const run_config& cfg, std::ostream& out);
int cmd_locus(const run_config& cfg, std::ostream& out);
int cmd_validate(const run_config& cfg, std::ostream& out);

}  // namespace ptwave::cli
