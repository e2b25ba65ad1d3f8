#include "angulon/lsquared.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "angulon/eigensolve.hpp"
#include "angulon/errors.hpp"
#include "angulon/harmonics.hpp"

namespace angulon {

namespace {

constexpr double kPi = std::numbers::pi;
// Max residual of the cotangent node condition under which the theta blocks
// are treated as certified symmetrizable.
constexpr double kCertifyTol = 1e-8;

void validate_angular_input(const NodeSet& theta_nodes, std::size_t m_phi) {
  const std::size_t n = theta_nodes.count();
  if (n == 0 || m_phi == 0)
    throw InvalidArgumentError("grid dimensions must be positive");
  if (n % 2 == 0 || m_phi % 2 == 0)
    throw InvalidArgumentError(
        "even counts select the half-integer (spin) ladder, which this "
        "construction excludes; n_theta and m_phi must be odd");
  for (std::size_t j = 0; j < n; ++j) {
    const double t = theta_nodes.points[j];
    if (!(t > 0.0 && t < kPi) || std::abs(std::sin(t)) < 1e-12) {
      std::ostringstream msg;
      msg << "theta node " << j + 1
          << " is at or outside the open interval (0, pi); cot and 1/sin^2 "
             "are singular there";
      throw EvaluationError(msg.str());
    }
  }
}

bool nodes_certified(const NodeSet& theta_nodes) {
  return node_condition_residual(theta_nodes, cot).max_abs < kCertifyTol;
}

// Common tail: tensor bookkeeping and the azimuthal term
// D_phi^2 kron sin^{-2}(Theta); the caller supplies the theta-axis operator
// of the chosen scheme. Orientation flips so the ladder n(n+1) is positive.
LSquaredOperator assemble_common(const NodeSet& theta_nodes,
                                 std::size_t m_phi,
                                 const RealMatrix& theta_term,
                                 const char* theta_factor_tag) {
  const std::size_t n = theta_nodes.count();

  LSquaredOperator op;
  op.theta_nodes = theta_nodes;
  op.phi_nodes = equidistant_nodes(m_phi);
  op.matrix.grid = TensorGrid{{theta_nodes, op.phi_nodes}};

  const RealMatrix dphi =
      real_part(trig_diff_matrix(op.phi_nodes).entries);
  const RealMatrix dphi2 = dphi * dphi;

  RealMatrix inv_sin2(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const double s = std::sin(theta_nodes.points[j]);
    inv_sin2(j, j) = 1.0 / (s * s);
  }

  RealMatrix full = kron_product(RealMatrix::identity(m_phi), theta_term) -
                    kron_product(dphi2, inv_sin2);
  op.matrix.entries = to_complex(full);
  std::ostringstream t1;
  t1 << "axis 1: " << theta_factor_tag << "(" << n << ")";
  std::ostringstream t2;
  t2 << "axis 2: second derivative kron axis 1: 1/sin^2(" << m_phi << "x"
     << n << ")";
  op.matrix.factors = {t1.str(), t2.str()};
  return op;
}

int ladder_label(double value, double tolerance) {
  if (value < -tolerance) return -1;
  const double root = 0.5 * (-1.0 + std::sqrt(std::max(0.0, 1.0 + 4.0 * value)));
  const int n = static_cast<int>(std::lround(root));
  if (n < 0) return -1;
  const double target = static_cast<double>(n) * (n + 1.0);
  if (std::abs(value - target) <= tolerance * std::max(1.0, target)) return n;
  return -1;
}

}  // namespace

std::string variant_tag(L2Variant v) {
  return v == L2Variant::direct ? "eq30" : "eq35";
}

LSquaredOperator assemble_l2(const NodeSet& theta_nodes, std::size_t m_phi) {
  validate_angular_input(theta_nodes, m_phi);
  const std::size_t n = theta_nodes.count();

  const OperatorMatrix dtheta = trig_diff_matrix(theta_nodes);
  const RealMatrix d = real_part(dtheta.entries);
  RealMatrix cot_diag(n, n);
  for (std::size_t j = 0; j < n; ++j)
    cot_diag(j, j) = cot(theta_nodes.points[j]);

  // theta term of -L2 is D^2 + cot(Th) D; negate for the +L2 orientation.
  const RealMatrix theta_term = -1.0 * (d * d + cot_diag * d);

  LSquaredOperator op = assemble_common(theta_nodes, m_phi, theta_term,
                                        "periodic-derivative scheme");
  op.variant = L2Variant::direct;
  op.exact_count = ((n + 1) / 2) * ((n + 1) / 2);
  op.psd_certified = nodes_certified(theta_nodes);
  if (m_phi < n)
    op.warnings.push_back(
        "exact eigenvalue guarantee requires m_phi >= n_theta; count not "
        "certified");
  return op;
}

LSquaredOperator assemble_l2_parity(const NodeSet& theta_nodes,
                                    std::size_t m_phi) {
  validate_angular_input(theta_nodes, m_phi);
  const std::size_t n = theta_nodes.count();

  const OperatorMatrix p = parity_diff_matrix(theta_nodes);
  const RealMatrix d = real_part(p.entries);
  RealMatrix cot_diag(n, n);
  for (std::size_t j = 0; j < n; ++j)
    cot_diag(j, j) = cot(theta_nodes.points[j]);

  // Rank-one correction N * S O S^{-1}: row pattern S_jj / S_kk over the
  // all-ones matrix.
  RealMatrix soc(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      soc(j, k) = static_cast<double>(n) * p.similarity[j] / p.similarity[k];

  // theta term of -L2 is P^2 + cot(Th) P - N S O S^{-1}; negated here.
  RealMatrix theta_term = soc - (d * d + cot_diag * d);

  LSquaredOperator op = assemble_common(theta_nodes, m_phi, theta_term,
                                        "full-angle cotangent scheme");
  op.variant = L2Variant::parity;
  if (m_phi >= 2 * n + 1) {
    op.exact_count = (n + 1) * (n + 1);
  } else {
    op.exact_count = 0;
    op.warnings.push_back(
        "exactness window requires m_phi >= 2*n_theta + 1; no count claimed");
  }
  return op;
}

ThetaBlock theta_block(const NodeSet& theta_nodes, int m) {
  const std::size_t n = theta_nodes.count();
  if (n == 0) throw InvalidArgumentError("empty node set");
  for (std::size_t j = 0; j < n; ++j) {
    const double t = theta_nodes.points[j];
    if (!(t > 0.0 && t < kPi))
      throw EvaluationError("theta nodes must lie strictly inside (0, pi)");
  }

  const OperatorMatrix dtheta = trig_diff_matrix(theta_nodes);
  const RealMatrix d = real_part(dtheta.entries);

  ThetaBlock block;
  block.m = m;
  block.t_diag = dtheta.similarity;

  RealMatrix cot_diag(n, n);
  RealMatrix m2_sin2(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = theta_nodes.points[j];
    cot_diag(j, j) = cot(t);
    const double s = std::sin(t);
    m2_sin2(j, j) = static_cast<double>(m) * static_cast<double>(m) / (s * s);
  }
  const RealMatrix dd = d * d + cot_diag * d;
  block.plain = m2_sin2 - dd;

  if (nodes_certified(theta_nodes)) {
    // In the scaled frame the derivative part factors as Dt^T Dt, which
    // keeps the block exactly symmetric PSD; mirror the lower triangle so
    // roundoff cannot break symmetry.
    const RealMatrix dt = dtheta.scaled_frame();
    RealMatrix sym(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) acc += dt(k, i) * dt(k, j);
        sym(i, j) = acc;
        sym(j, i) = acc;
      }
    for (std::size_t j = 0; j < n; ++j) sym(j, j) += m2_sin2(j, j);
    block.symmetrized = std::move(sym);
    block.symmetric_available = true;
  }
  return block;
}

LabeledSpectrum labeled_spectrum(const LSquaredOperator& op,
                                 double tolerance) {
  if (tolerance <= 0.0)
    throw InvalidArgumentError("tolerance must be positive");
  const std::size_t n = op.theta_nodes.count();
  const std::size_t m_phi = op.phi_nodes.count();
  const std::size_t dim = n * m_phi;

  LabeledSpectrum spec;
  spec.exact_count = op.exact_count;

  struct Pair {
    double value;
    int m;
    std::size_t idx;   // eigenvector column within its block
    std::size_t orig;  // position in pair_vectors, which is never reordered
  };
  std::vector<Pair> pairs;
  std::vector<ComplexMatrix> pair_vectors;  // full-grid vector per pair

  const bool block_path =
      op.variant == L2Variant::direct && op.psd_certified;
  if (block_path) {
    const int half = static_cast<int>((m_phi - 1) / 2);
    std::vector<EigenDecomposition> solved(half + 1);
    std::vector<ThetaBlock> blocks;
    blocks.reserve(half + 1);
    for (int m = 0; m <= half; ++m) {
      blocks.push_back(theta_block(op.theta_nodes, m));
      solved[m] = jacobi_symmetric(blocks[m].symmetrized);
    }
    pairs.reserve(dim);
    pair_vectors.reserve(dim);
    const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m_phi));
    for (int m = -half; m <= half; ++m) {
      const int am = std::abs(m);
      const EigenDecomposition& eig = solved[am];
      for (std::size_t c = 0; c < n; ++c) {
        pairs.push_back({eig.values[c].real(), m, c, pairs.size()});
        ComplexMatrix vec(dim, 1);
        for (std::size_t k = 0; k < m_phi; ++k) {
          const double arg =
              static_cast<double>(m) * op.phi_nodes.points[k];
          const cplx fm =
              cplx(std::cos(arg), std::sin(arg)) * inv_sqrt_m;
          for (std::size_t j = 0; j < n; ++j)
            vec(k * n + j, 0) =
                fm * blocks[am].t_diag[j] * eig.vectors(j, c);
        }
        const double vnorm = vec.frobenius();
        if (vnorm > 0.0) vec = cplx(1.0 / vnorm, 0.0) * vec;
        pair_vectors.push_back(std::move(vec));
      }
    }
    spec.has_vectors = true;
    spec.max_imag_abs = 0.0;
  } else {
    const EigenDecomposition eig = hessenberg_qr(op.matrix.entries);
    pairs.reserve(dim);
    for (std::size_t i = 0; i < eig.values.size(); ++i) {
      spec.max_imag_abs =
          std::max(spec.max_imag_abs, std::abs(eig.values[i].imag()));
      pairs.push_back({eig.values[i].real(), 0, i, i});
    }
  }

  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.m != b.m) return a.m < b.m;
    return a.idx < b.idx;
  });

  double peak = 0.0;
  for (const Pair& p : pairs) peak = std::max(peak, std::abs(p.value));
  const double gap = std::max(tolerance, 1e-8 * peak);

  spec.eigenvalues.reserve(pairs.size());
  spec.cluster_of.resize(pairs.size());
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    spec.eigenvalues.push_back(pairs[i].value);
    if (i == 0 || pairs[i].value - pairs[i - 1].value > gap) {
      members.emplace_back();
    }
    members.back().push_back(i);
    spec.cluster_of[i] = members.size() - 1;
  }

  TensorGrid grid{{op.theta_nodes, op.phi_nodes}};
  std::size_t seen = 0;
  for (const std::vector<std::size_t>& cluster : members) {
    SpectrumCluster c;
    c.multiplicity = cluster.size();
    double mean = 0.0;
    for (std::size_t i : cluster) mean += pairs[i].value;
    c.value = mean / static_cast<double>(cluster.size());

    const bool in_exact_window = seen < op.exact_count;
    if (in_exact_window) {
      const int label = ladder_label(c.value, tolerance);
      if (label >= 0) {
        c.labeled = true;
        c.n_label = label;
      }
    }

    ComplexMatrix vecs;
    if (spec.has_vectors) {
      vecs = ComplexMatrix(dim, cluster.size());
      for (std::size_t col = 0; col < cluster.size(); ++col)
        for (std::size_t i = 0; i < dim; ++i)
          vecs(i, col) = pair_vectors[pairs[cluster[col]].orig](i, 0);

      if (c.labeled) {
        std::vector<HarmonicSample> samples;
        const int reach =
            std::min(c.n_label, static_cast<int>((m_phi - 1) / 2));
        for (int m = -reach; m <= reach; ++m) {
          HarmonicSample s = harmonic_on_grid(c.n_label, m, grid);
          if (!s.degenerate) samples.push_back(std::move(s));
        }
        if (!samples.empty()) {
          c.max_subspace_residual = subspace_residual(vecs, samples);
          c.residual_available = true;
        }
      }
    }
    spec.eigenvectors.push_back(std::move(vecs));
    spec.clusters.push_back(c);
    seen += cluster.size();
  }
  return spec;
}

}  // namespace angulon
