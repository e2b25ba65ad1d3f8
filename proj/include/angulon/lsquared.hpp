#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "angulon/dense.hpp"
#include "angulon/diffmat.hpp"
#include "angulon/nodes.hpp"
#include "angulon/tensor.hpp"

namespace angulon {

// The two assembly variants keep their external tags "eq30" and "eq35" as
// opaque identifiers of the run configuration schema. direct builds the
// operator from the periodic-derivative projection on the theta axis; parity
// builds it from the full-angle cotangent scheme plus its rank-one
// correction.
enum class L2Variant { direct, parity };

std::string variant_tag(L2Variant v);  // "eq30" | "eq35"

// Squared-angular-momentum projection on an N x M (theta x phi) grid,
// oriented so the physical ladder n(n+1) is nonnegative.
// exact_count: how many of the lowest eigenvalues the construction claims
// exactly. direct: ((N+1)/2)^2. parity: (N+1)^2 when M >= 2N+1, else 0.
struct LSquaredOperator {
  KronOperator matrix;
  L2Variant variant = L2Variant::direct;
  NodeSet theta_nodes;
  NodeSet phi_nodes;
  std::size_t exact_count = 0;
  // True when the theta nodes satisfy the cotangent stationarity condition,
  // which makes every theta block diagonally similar to a symmetric
  // positive-semidefinite matrix.
  bool psd_certified = false;
  std::vector<std::string> warnings;
};

// Per-m theta block: the N x N operator obtained by replacing the azimuthal
// derivative with its eigenvalue i*m,
//   plain = -(D^2 + cot(Th) D) + m^2 sin^{-2}(Th).
// When the nodes satisfy the cotangent condition the block is diagonally
// similar to symmetrized = Dt^T Dt + m^2 sin^{-2}(Th) (symmetric, PSD) with
// Dt the scaled frame of D; t_diag holds the similarity diagonal. Otherwise
// symmetric_available is false and only plain is meaningful.
struct ThetaBlock {
  int m = 0;
  RealMatrix plain;
  bool symmetric_available = false;
  RealMatrix symmetrized;
  std::vector<double> t_diag;
};

struct SpectrumCluster {
  double value = 0.0;  // representative (mean) of the cluster
  std::size_t multiplicity = 0;
  bool labeled = false;
  int n_label = -1;
  bool residual_available = false;
  double max_subspace_residual = 0.0;
};

// Eigenvalues of the assembled operator, ascending, grouped into degenerate
// clusters; clusters inside the exact window that match a ladder value
// n(n+1) carry the n label and, when eigenvectors were produced, a
// scale-invariant oracle residual. eigenvalue i belongs to
// clusters[cluster_of[i]]. max_imag_abs reports how far the nonsymmetric
// solve strayed from the real axis (0 on the block path).
struct LabeledSpectrum {
  std::vector<double> eigenvalues;
  std::vector<std::size_t> cluster_of;
  std::vector<SpectrumCluster> clusters;
  std::vector<ComplexMatrix> eigenvectors;  // per cluster; empty if absent
  bool has_vectors = false;
  double max_imag_abs = 0.0;
  std::size_t exact_count = 0;
};

// Direct assembly on theta nodes in (0, pi) (odd count) and m_phi (odd)
// equidistant phi nodes:
//   -L2 = 1_M kron [D_th^2 + cot(Th) D_th] + D_ph^2 kron sin^{-2}(Th).
// Even counts are rejected: they select the half-integer ladder, which this
// construction excludes. A theta node at 0 or pi makes the coefficients
// singular and is rejected. m_phi < N clears the exactness guarantee and is
// flagged in warnings.
LSquaredOperator assemble_l2(const NodeSet& theta_nodes, std::size_t m_phi);

// Parity-scheme assembly:
//   -L2 = 1_M kron [P^2 + cot(Th) P - N S O S^{-1}] + D_ph^2 kron sin^{-2}(Th)
// with P the full-angle cotangent matrix, S its similarity diagonal and O
// the all-ones matrix. Same input restrictions as assemble_l2.
LSquaredOperator assemble_l2_parity(const NodeSet& theta_nodes,
                                    std::size_t m_phi);

ThetaBlock theta_block(const NodeSet& theta_nodes, int m);

// Spectrum extraction. Uses the per-m block decomposition with the symmetric
// Jacobi solver (eigenvectors included) when the operator is the direct
// variant with certified nodes; otherwise falls back to the dense
// nonsymmetric solve (values only). tolerance controls both the degeneracy
// clustering gap, max(tolerance, 1e-8 * ||spectrum||_inf), and the ladder
// matching window.
LabeledSpectrum labeled_spectrum(const LSquaredOperator& op,
                                 double tolerance = 1e-6);

}  // namespace angulon
