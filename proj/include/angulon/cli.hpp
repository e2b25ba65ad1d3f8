#pragma once

#include <string>
#include <vector>

#include "angulon/lsquared.hpp"

namespace angulon {

enum class Command { nodes, diffmat, lz, l2, verify };
enum class ThetaMode { solved, equidistant_open, explicit_list };
enum class OutputFormat { json, csv };
enum class DiffType { poly, trig, parity };

// One fully validated batch run. Identical configs produce byte-identical
// output files.
struct RunConfig {
  Command command = Command::verify;

  // nodes / l2 / diffmat node sources
  int n_theta = 0;
  int m_phi = 0;
  ThetaMode theta_mode = ThetaMode::solved;
  std::vector<double> explicit_points;

  // lz
  int n = 0;

  // diffmat
  DiffType diff_type = DiffType::poly;
  int power = 1;
  bool equidistant = false;  // nodes/diffmat: equidistant instead of solved

  // l2
  L2Variant variant = L2Variant::direct;

  // verify
  int criterion = 0;  // 0 = all

  OutputFormat output = OutputFormat::json;
  std::string out_path;  // empty = stdout

  // tolerance overrides (0 = module default)
  double solver_tolerance = 0.0;
  double cluster_tolerance = 0.0;
};

// Executes the run. Returns the process exit code: 0 success, 1 runtime or
// verification failure, 2 usage error. Diagnostics go to the given error
// stream as single "error: ..." / "warning: ..." lines.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace angulon
