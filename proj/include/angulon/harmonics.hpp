#pragma once

#include <vector>

#include "angulon/dense.hpp"
#include "angulon/tensor.hpp"

namespace angulon {

// Spherical-harmonic sample on a theta x phi grid, raveled theta-fastest:
//   values_r = P_n^{|m|}(cos theta_j) * e^{i m phi_k},  r = j + (k-1) N.
// Normalization is internal and never compared against directly; all
// consumers use scale-invariant residuals. degenerate marks an all-zero
// sample (every theta node at a Legendre root).
struct HarmonicSample {
  int n = 0;
  int m = 0;
  std::vector<cplx> values;
  bool degenerate = false;
};

// Associated Legendre value by upward recurrence from the closed-form seed
//   P_m^m(x) = (-1)^m (2m-1)!! (1 - x^2)^{m/2}.
// Requires 0 <= m <= n and |x| <= 1. Negative m is a caller-side
// proportionality and is handled by harmonic_on_grid.
double assoc_legendre(int n, int m, double x);

// Sample of the (n, m) harmonic on a two-axis grid (theta axis 1, phi
// axis 2). Requires |m| <= n.
HarmonicSample harmonic_on_grid(int n, int m, const TensorGrid& grid);

// Largest relative distance from the samples to the span of the given
// columns: max over samples of ||s - Q Q^H s|| / ||s|| after orthonormalizing
// the columns. Zero means every sample lies inside the span; zero-norm
// samples are rejected.
double subspace_residual(const ComplexMatrix& eigvectors,
                         const std::vector<HarmonicSample>& samples);

}  // namespace angulon
