#include "angulon/harmonics.hpp"

#include <cmath>
#include <sstream>

#include "angulon/errors.hpp"

namespace angulon {

double assoc_legendre(int n, int m, double x) {
  if (m < 0 || m > n) throw InvalidArgumentError("requires 0 <= m <= n");
  if (std::abs(x) > 1.0) throw InvalidArgumentError("requires |x| <= 1");

  // Seed P_m^m, then climb n with the three-term recurrence
  //   (n - m) P_n^m = x (2n - 1) P_{n-1}^m - (n - 1 + m) P_{n-2}^m.
  double pmm = 1.0;
  if (m > 0) {
    const double s = std::sqrt((1.0 - x) * (1.0 + x));
    double fact = 1.0;
    for (int i = 1; i <= m; ++i) {
      pmm *= -fact * s;
      fact += 2.0;
    }
  }
  if (n == m) return pmm;
  double pmm1 = x * (2.0 * m + 1.0) * pmm;
  if (n == m + 1) return pmm1;
  double p = 0.0;
  for (int nn = m + 2; nn <= n; ++nn) {
    p = (x * (2.0 * nn - 1.0) * pmm1 - (nn - 1.0 + m) * pmm) /
        static_cast<double>(nn - m);
    pmm = pmm1;
    pmm1 = p;
  }
  return p;
}

HarmonicSample harmonic_on_grid(int n, int m, const TensorGrid& grid) {
  if (n < 0 || std::abs(m) > n)
    throw InvalidArgumentError("requires |m| <= n and n >= 0");
  if (grid.axes.size() != 2)
    throw InvalidArgumentError("requires a two-axis theta x phi grid");

  const std::vector<double>& theta = grid.axes[0].points;
  const std::vector<double>& phi = grid.axes[1].points;
  const int mm = std::abs(m);

  HarmonicSample sample;
  sample.n = n;
  sample.m = m;
  sample.values.resize(grid.total());
  double peak = 0.0;
  for (std::size_t k = 0; k < phi.size(); ++k)
    for (std::size_t j = 0; j < theta.size(); ++j) {
      const double pj = assoc_legendre(n, mm, std::cos(theta[j]));
      const double arg = static_cast<double>(m) * phi[k];
      const cplx v = pj * cplx(std::cos(arg), std::sin(arg));
      sample.values[k * theta.size() + j] = v;
      peak = std::max(peak, std::abs(v));
    }
  sample.degenerate = peak < 1e-14;
  return sample;
}

double subspace_residual(const ComplexMatrix& eigvectors,
                         const std::vector<HarmonicSample>& samples) {
  const std::size_t dim = eigvectors.rows();
  const std::size_t cols = eigvectors.cols();

  // Modified Gram-Schmidt onto an orthonormal basis of the span.
  std::vector<std::vector<cplx>> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<cplx> v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = eigvectors(i, c);
    for (const auto& q : basis) {
      cplx dot = 0.0;
      for (std::size_t i = 0; i < dim; ++i) dot += std::conj(q[i]) * v[i];
      for (std::size_t i = 0; i < dim; ++i) v[i] -= dot * q[i];
    }
    double norm = 0.0;
    for (const cplx& vi : v) norm += std::norm(vi);
    norm = std::sqrt(norm);
    if (norm < 1e-12) continue;  // dependent column adds nothing to the span
    for (cplx& vi : v) vi /= norm;
    basis.push_back(std::move(v));
  }

  double worst = 0.0;
  for (const HarmonicSample& s : samples) {
    if (s.values.size() != dim)
      throw InvalidArgumentError("sample length does not match vectors");
    double snorm = 0.0;
    for (const cplx& v : s.values) snorm += std::norm(v);
    snorm = std::sqrt(snorm);
    if (snorm < 1e-14) {
      std::ostringstream msg;
      msg << "zero-norm sample (n=" << s.n << ", m=" << s.m
          << "); choose different theta nodes";
      throw DegenerateSampleError(msg.str());
    }
    std::vector<cplx> rem(s.values);
    for (const auto& q : basis) {
      cplx dot = 0.0;
      for (std::size_t i = 0; i < dim; ++i) dot += std::conj(q[i]) * rem[i];
      for (std::size_t i = 0; i < dim; ++i) rem[i] -= dot * q[i];
    }
    double rnorm = 0.0;
    for (const cplx& v : rem) rnorm += std::norm(v);
    worst = std::max(worst, std::sqrt(rnorm) / snorm);
  }
  return worst;
}

}  // namespace angulon
