#include "angulon/cli.hpp"

#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "angulon/acceptance.hpp"
#include "angulon/errors.hpp"
#include "angulon/serialize.hpp"

namespace angulon {

namespace {

NodeSet theta_nodes_for(const RunConfig& config) {
  switch (config.theta_mode) {
    case ThetaMode::solved: {
      const double tol =
          config.solver_tolerance > 0.0 ? config.solver_tolerance : 1e-12;
      return solve_theta_nodes(static_cast<std::size_t>(config.n_theta), tol);
    }
    case ThetaMode::equidistant_open: {
      NodeSet nodes{NodeKind::open, {}};
      const int n = config.n_theta;
      for (int j = 1; j <= n; ++j)
        nodes.points.push_back(j * std::numbers::pi / (n + 1));
      return nodes;
    }
    case ThetaMode::explicit_list:
      return NodeSet{NodeKind::open, config.explicit_points};
  }
  throw InvalidArgumentError("unknown theta mode");
}

int emit(const RunConfig& config, const std::string& text, std::ostream& out,
         std::ostream& err) {
  if (config.out_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(config.out_path, std::ios::binary);
  if (!file) {
    err << "error: io: cannot open " << config.out_path << " for writing\n";
    return 1;
  }
  file << text;
  file.close();
  if (!file) {
    err << "error: io: short write to " << config.out_path << "\n";
    return 1;
  }
  return 0;
}

int run_nodes(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const NodeSet nodes =
      config.equidistant
          ? equidistant_nodes(static_cast<std::size_t>(config.n_theta))
          : theta_nodes_for(config);
  const std::string text =
      config.output == OutputFormat::csv
          ? nodeset_csv(nodes)
          : json_document("nodes", nodeset_json(nodes));
  return emit(config, text, out, err);
}

int run_diffmat(const RunConfig& config, std::ostream& out,
                std::ostream& err) {
  NodeSet nodes;
  if (config.equidistant) {
    nodes = equidistant_nodes(static_cast<std::size_t>(config.n_theta));
  } else if (config.theta_mode == ThetaMode::explicit_list) {
    NodeKind kind = NodeKind::general;
    if (config.diff_type == DiffType::trig) kind = NodeKind::periodic;
    if (config.diff_type == DiffType::parity) kind = NodeKind::open;
    nodes = NodeSet{kind, config.explicit_points};
  } else {
    nodes = theta_nodes_for(config);
  }

  OperatorMatrix op;
  switch (config.diff_type) {
    case DiffType::poly:
      op = poly_diff_matrix(nodes);
      break;
    case DiffType::trig:
      op = trig_diff_matrix(nodes);
      break;
    case DiffType::parity:
      op = parity_diff_matrix(nodes);
      break;
  }
  if (config.power != 1) op = matrix_power(op, config.power);
  const std::string text =
      json_document("diffmat", operator_matrix_json(op));
  return emit(config, text, out, err);
}

int run_lz(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::size_t n = static_cast<std::size_t>(config.n);
  const RotationGenerator gen = build_rotation_generator(n);
  const LzEigensystem sys = lz_eigensystem(n);
  const std::string text = json_document("lz", rotation_json(gen, sys));
  return emit(config, text, out, err);
}

int run_l2(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const NodeSet theta = theta_nodes_for(config);
  const LSquaredOperator op =
      config.variant == L2Variant::direct
          ? assemble_l2(theta, static_cast<std::size_t>(config.m_phi))
          : assemble_l2_parity(theta, static_cast<std::size_t>(config.m_phi));
  for (const std::string& w : op.warnings) err << "warning: " << w << "\n";
  const double tol =
      config.cluster_tolerance > 0.0 ? config.cluster_tolerance : 1e-6;
  const LabeledSpectrum spectrum = labeled_spectrum(op, tol);
  const std::string text =
      config.output == OutputFormat::csv
          ? spectrum_csv(spectrum)
          : json_document("l2", spectrum_json(spectrum, op));
  return emit(config, text, out, err);
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::vector<CriterionResult> results = run_acceptance(config.criterion);
  std::ostringstream report;
  print_report(results, report);
  const int code = emit(config, report.str(), out, err);
  if (code != 0) return code;
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::nodes:
        return run_nodes(config, out, err);
      case Command::diffmat:
        return run_diffmat(config, out, err);
      case Command::lz:
        return run_lz(config, out, err);
      case Command::l2:
        return run_l2(config, out, err);
      case Command::verify:
        return run_verify(config, out, err);
    }
    err << "error: usage: unknown command\n";
    return 2;
  } catch (const AngulonError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace angulon
