#pragma once

#include <vector>

#include "angulon/dense.hpp"

namespace angulon {

struct EigenDecomposition {
  std::vector<cplx> values;  // imaginary parts are zero on the symmetric path
  RealMatrix vectors;        // orthonormal columns; empty when not produced
  bool has_vectors = false;
  int iterations = 0;
  double residual = 0.0;  // max_j ||A v_j - lambda_j v_j|| / ||A||_F
};

// Full eigensystem of a real symmetric matrix by cyclic-by-row Jacobi
// rotations with the classic small-element threshold. Deterministic sweep
// order; values ascending with matching vector columns. Asymmetry beyond
// 1e-12 in max norm is rejected. 30 sweeps maximum.
EigenDecomposition jacobi_symmetric(const RealMatrix& a);

// All eigenvalues (no vectors) of a general complex matrix via Householder
// Hessenberg reduction and shifted QR with deflation. Wilkinson shift from
// the trailing 2x2, exceptional shift every 10 stalled iterations, 100
// iterations per eigenvalue. Values sorted by real part, then imaginary.
EigenDecomposition hessenberg_qr(const ComplexMatrix& a);

// exp(A) by scaling-and-squaring with a fixed [6/6] Pade approximant.
ComplexMatrix matrix_exponential(const ComplexMatrix& a);

}  // namespace angulon
