#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "angulon/cli.hpp"

namespace {

using angulon::RunConfig;

int to_format(const std::string& name, angulon::OutputFormat* out) {
  if (name == "json") {
    *out = angulon::OutputFormat::json;
    return 0;
  }
  if (name == "csv") {
    *out = angulon::OutputFormat::csv;
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"angulon: discrete angular momentum operators"};
  app.require_subcommand(1);

  RunConfig config;
  std::string output_name = "json";
  std::string theta_name = "solved";
  std::string variant_name = "eq30";
  std::string type_name;
  std::vector<double> points;

  CLI::App* nodes = app.add_subcommand(
      "nodes", "Emit a node set (solved theta nodes or equidistant angles)");
  int solve_n = 0, equi_n = 0;
  auto* nodes_solve =
      nodes->add_option("--solve-theta", solve_n, "Solve N theta nodes");
  auto* nodes_equi = nodes->add_option("--equidistant", equi_n,
                                       "N equidistant periodic angles");
  nodes_solve->excludes(nodes_equi);
  nodes->add_option("--tolerance", config.solver_tolerance,
                    "Node solver residual target");
  nodes->add_option("--output", output_name, "json|csv");
  nodes->add_option("--out", config.out_path, "Output file (default stdout)");

  CLI::App* diffmat = app.add_subcommand(
      "diffmat", "Emit a derivative projection matrix (JSON)");
  diffmat->add_option("--type", type_name, "poly|trig|parity")->required();
  auto* dm_equi = diffmat->add_option("--equidistant", equi_n,
                                      "N equidistant periodic angles");
  auto* dm_solve =
      diffmat->add_option("--solve-theta", solve_n, "Solve N theta nodes");
  auto* dm_points = diffmat->add_option("--points", points,
                                        "Explicit comma-separated nodes")
                        ->delimiter(',');
  dm_equi->excludes(dm_solve);
  dm_equi->excludes(dm_points);
  dm_solve->excludes(dm_points);
  diffmat->add_option("--power", config.power, "Matrix power (default 1)");
  diffmat->add_option("--tolerance", config.solver_tolerance,
                      "Node solver residual target");
  diffmat->add_option("--out", config.out_path, "Output file");

  CLI::App* lz = app.add_subcommand(
      "lz", "Emit the rotation generator and its eigensystem (JSON)");
  lz->add_option("--n", config.n, "Representation dimension")->required();
  lz->add_option("--output", output_name, "json");
  lz->add_option("--out", config.out_path, "Output file");

  CLI::App* l2 = app.add_subcommand(
      "l2", "Assemble the squared-momentum operator and emit its spectrum");
  l2->add_option("--variant", variant_name, "eq30|eq35")
      ->check(CLI::IsMember({"eq30", "eq35"}));
  l2->add_option("--n-theta", config.n_theta, "Theta node count")->required();
  l2->add_option("--m-phi", config.m_phi, "Phi node count")->required();
  l2->add_option("--theta", theta_name, "solved|equidistant-open");
  auto* l2_points =
      l2->add_option("--theta-points", points, "Explicit theta nodes")
          ->delimiter(',');
  l2->add_option("--tolerance", config.cluster_tolerance,
                 "Degeneracy clustering gap");
  l2->add_option("--solver-tolerance", config.solver_tolerance,
                 "Node solver residual target");
  l2->add_option("--output", output_name, "json|csv");
  l2->add_option("--out", config.out_path, "Output file");

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the acceptance suite and report pass/fail per criterion");
  verify->add_option("--criterion", config.criterion,
                     "Run a single criterion by number (1-13)");
  verify->add_option("--out", config.out_path, "Report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  }

  if (to_format(output_name, &config.output) != 0) {
    std::cerr << "error: usage: unknown output format '" << output_name
              << "'\n";
    return 2;
  }

  if (nodes->parsed()) {
    config.command = angulon::Command::nodes;
    if ((solve_n > 0) == (equi_n > 0)) {
      std::cerr << "error: usage: nodes needs exactly one of --solve-theta "
                   "or --equidistant\n";
      return 2;
    }
    config.equidistant = equi_n > 0;
    config.n_theta = config.equidistant ? equi_n : solve_n;
    config.theta_mode = angulon::ThetaMode::solved;
  } else if (diffmat->parsed()) {
    config.command = angulon::Command::diffmat;
    if (type_name == "poly")
      config.diff_type = angulon::DiffType::poly;
    else if (type_name == "trig")
      config.diff_type = angulon::DiffType::trig;
    else if (type_name == "parity")
      config.diff_type = angulon::DiffType::parity;
    else {
      std::cerr << "error: usage: unknown diffmat type '" << type_name
                << "'\n";
      return 2;
    }
    const int sources =
        (equi_n > 0 ? 1 : 0) + (solve_n > 0 ? 1 : 0) + (points.empty() ? 0 : 1);
    if (sources != 1) {
      std::cerr << "error: usage: diffmat needs exactly one node source "
                   "(--equidistant, --solve-theta, or --points)\n";
      return 2;
    }
    if (config.output == angulon::OutputFormat::csv) {
      std::cerr << "error: usage: diffmat supports json output only\n";
      return 2;
    }
    config.equidistant = equi_n > 0;
    config.n_theta = config.equidistant ? equi_n : solve_n;
    config.theta_mode = points.empty() ? angulon::ThetaMode::solved
                                       : angulon::ThetaMode::explicit_list;
    config.explicit_points = points;
  } else if (lz->parsed()) {
    config.command = angulon::Command::lz;
    if (config.output == angulon::OutputFormat::csv) {
      std::cerr << "error: usage: lz supports json output only\n";
      return 2;
    }
    if (config.n < 2) {
      std::cerr << "error: usage: lz needs --n >= 2\n";
      return 2;
    }
  } else if (l2->parsed()) {
    config.command = angulon::Command::l2;
    config.variant = variant_name == "eq35" ? angulon::L2Variant::parity
                                            : angulon::L2Variant::direct;
    if (!points.empty()) {
      config.theta_mode = angulon::ThetaMode::explicit_list;
      config.explicit_points = points;
    } else if (theta_name == "solved") {
      config.theta_mode = angulon::ThetaMode::solved;
    } else if (theta_name == "equidistant-open") {
      config.theta_mode = angulon::ThetaMode::equidistant_open;
    } else {
      std::cerr << "error: usage: unknown theta mode '" << theta_name
                << "'\n";
      return 2;
    }
    if (l2_points->count() > 0 && theta_name != "solved") {
      std::cerr
          << "error: usage: --theta-points conflicts with --theta mode\n";
      return 2;
    }
    if (config.n_theta < 1 || config.m_phi < 1) {
      std::cerr << "error: usage: l2 needs positive --n-theta and --m-phi\n";
      return 2;
    }
  } else if (verify->parsed()) {
    config.command = angulon::Command::verify;
    if (config.criterion < 0 || config.criterion > 13) {
      std::cerr << "error: usage: --criterion must be 1..13\n";
      return 2;
    }
  }

  return angulon::run(config, std::cout, std::cerr);
}
