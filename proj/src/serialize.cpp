#include "angulon/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace angulon {

std::string fmt_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::periodic: return "periodic";
    case NodeKind::open: return "open";
    case NodeKind::general: return "general";
  }
  return "unknown";
}

namespace {

std::string float_array(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += fmt_g17(v[i]);
  }
  return out + "]";
}

std::string complex_pair(const cplx& z) {
  return "[" + fmt_g17(z.real()) + "," + fmt_g17(z.imag()) + "]";
}

std::string complex_matrix_rows(const ComplexMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += complex_pair(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace

std::string nodeset_json(const NodeSet& nodes) {
  return "{\"kind\":\"" + node_kind_name(nodes.kind) +
         "\",\"points\":" + float_array(nodes.points) + "}";
}

std::string operator_matrix_json(const OperatorMatrix& op) {
  std::string out = "{\"nodes\":" + nodeset_json(op.nodes);
  out += ",\"exactness\":{\"class\":\"" +
         exactness_class_name(op.exactness.kind) +
         "\",\"degree\":" + std::to_string(op.exactness.degree) + "}";
  if (!op.similarity.empty())
    out += ",\"similarity\":" + float_array(op.similarity);
  out += ",\"entries\":" + complex_matrix_rows(op.entries) + "}";
  return out;
}

std::string rotation_json(const RotationGenerator& gen,
                          const LzEigensystem& sys) {
  std::string out = "{\"n\":" + std::to_string(gen.n);
  out += ",\"parity\":\"";
  out += gen.parity == Parity::odd ? "odd" : "even";
  out += "\",\"epsilon\":" + fmt_g17(gen.epsilon);
  out += ",\"delta\":" + operator_matrix_json(gen.delta);
  out += ",\"a_matrix\":" + operator_matrix_json(gen.a_matrix);
  out += ",\"lz\":" + operator_matrix_json(gen.lz);
  out += ",\"eigenvalues\":" + float_array(sys.eigenvalues);
  out += ",\"eigenvectors\":" + complex_matrix_rows(sys.eigenvectors);
  out += ",\"phi_nodes\":" + nodeset_json(sys.phi_nodes) + "}";
  return out;
}

std::string spectrum_json(const LabeledSpectrum& spectrum,
                          const LSquaredOperator& op) {
  std::string out = "{\"variant\":\"" + variant_tag(op.variant) + "\"";
  out += ",\"exact_count\":" + std::to_string(spectrum.exact_count);
  out += ",\"psd_certified\":";
  out += op.psd_certified ? "true" : "false";
  out += ",\"max_imag_abs\":" + fmt_g17(spectrum.max_imag_abs);
  out += ",\"theta_nodes\":" + nodeset_json(op.theta_nodes);
  out += ",\"phi_nodes\":" + nodeset_json(op.phi_nodes);
  out += ",\"eigenvalues\":" + float_array(spectrum.eigenvalues);
  out += ",\"clusters\":[";
  for (std::size_t i = 0; i < spectrum.clusters.size(); ++i) {
    const SpectrumCluster& c = spectrum.clusters[i];
    if (i) out += ",";
    out += "{\"value\":" + fmt_g17(c.value);
    out += ",\"multiplicity\":" + std::to_string(c.multiplicity);
    out += ",\"n_label\":";
    out += c.labeled ? std::to_string(c.n_label) : "null";
    out += ",\"max_subspace_residual\":";
    out += c.residual_available ? fmt_g17(c.max_subspace_residual) : "null";
    if (spectrum.has_vectors && !spectrum.eigenvectors[i].empty())
      out += ",\"eigenvectors\":" +
             complex_matrix_rows(spectrum.eigenvectors[i]);
    out += "}";
  }
  out += "]";
  if (!op.warnings.empty()) {
    out += ",\"warnings\":[";
    for (std::size_t i = 0; i < op.warnings.size(); ++i) {
      if (i) out += ",";
      out += "\"" + json_escape(op.warnings[i]) + "\"";
    }
    out += "]";
  }
  return out + "}";
}

std::string json_document(const std::string& command,
                          const std::string& payload) {
  return "{\"schema\":\"angulon/1\",\"command\":\"" + json_escape(command) +
         "\",\"result\":" + payload + "}\n";
}

std::string nodeset_csv(const NodeSet& nodes) {
  std::string out = "index,point\n";
  for (std::size_t i = 0; i < nodes.points.size(); ++i)
    out += std::to_string(i + 1) + "," + fmt_g17(nodes.points[i]) + "\n";
  return out;
}

std::string spectrum_csv(const LabeledSpectrum& spectrum) {
  std::string out = "index,value,multiplicity,n_label,max_subspace_residual\n";
  for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
    const SpectrumCluster& c = spectrum.clusters[spectrum.cluster_of[i]];
    out += std::to_string(i + 1) + "," + fmt_g17(spectrum.eigenvalues[i]) +
           "," + std::to_string(c.multiplicity) + ",";
    if (c.labeled) out += std::to_string(c.n_label);
    out += ",";
    if (c.residual_available) out += fmt_g17(c.max_subspace_residual);
    out += "\n";
  }
  return out;
}

}  // namespace angulon
