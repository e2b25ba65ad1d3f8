#pragma once

#include <string>

#include "angulon/diffmat.hpp"
#include "angulon/lsquared.hpp"
#include "angulon/nodes.hpp"
#include "angulon/rotations.hpp"

namespace angulon {

// Floats are rendered with 17 significant digits everywhere, so identical
// runs produce byte-identical files and values round-trip through text.
std::string fmt_g17(double v);

std::string json_escape(const std::string& s);

std::string node_kind_name(NodeKind kind);

// Payload fragments (JSON objects without the top-level envelope).
std::string nodeset_json(const NodeSet& nodes);
std::string operator_matrix_json(const OperatorMatrix& op);
std::string rotation_json(const RotationGenerator& gen,
                          const LzEigensystem& sys);
std::string spectrum_json(const LabeledSpectrum& spectrum,
                          const LSquaredOperator& op);

// Envelope: {"schema":"angulon/1","command":<command>,"result":<payload>}.
std::string json_document(const std::string& command,
                          const std::string& payload);

// CSV tables. Eigenvalue table columns:
//   index,value,multiplicity,n_label,max_subspace_residual
// with empty fields where a label or residual is absent.
std::string nodeset_csv(const NodeSet& nodes);
std::string spectrum_csv(const LabeledSpectrum& spectrum);

}  // namespace angulon
