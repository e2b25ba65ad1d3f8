#include "angulon/eigensolve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

#include "angulon/errors.hpp"

namespace angulon {

namespace {

// Plane rotation zeroing the second component of (f, g): c real, s complex,
//   [ c       s      ] [f]   [r]
//   [ -conj(s) c     ] [g] = [0].
void givens(cplx f, cplx g, double& c, cplx& s) {
  const double af = std::abs(f);
  const double ag = std::abs(g);
  if (ag == 0.0) {
    c = 1.0;
    s = 0.0;
    return;
  }
  if (af == 0.0) {
    c = 0.0;
    s = std::conj(g) / ag;
    return;
  }
  const double r = std::hypot(af, ag);
  c = af / r;
  s = (f / af) * std::conj(g) / r;
}

std::array<cplx, 2> eig2x2(cplx a, cplx b, cplx c, cplx d) {
  const cplx tr = 0.5 * (a + d);
  const cplx disc = std::sqrt(tr * tr - (a * d - b * c));
  return {tr + disc, tr - disc};
}

// Partial-pivoted LU solve A X = B in place; A and B are overwritten.
ComplexMatrix lu_solve(ComplexMatrix a, ComplexMatrix b) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        piv = i;
      }
    if (best == 0.0)
      throw ConvergenceFailure("singular denominator in Pade solve", 0.0, 0);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(k, j), b(piv, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx m = a(i, k) / a(k, k);
      a(i, k) = m;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) -= m * b(k, j);
    }
  }
  for (std::size_t col = 0; col < b.cols(); ++col)
    for (std::size_t ii = n; ii-- > 0;) {
      cplx v = b(ii, col);
      for (std::size_t j = ii + 1; j < n; ++j) v -= a(ii, j) * b(j, col);
      b(ii, col) = v / a(ii, ii);
    }
  return b;
}

// Householder reduction to upper Hessenberg form, in place.
void hessenberg_reduce(ComplexMatrix& h) {
  const std::size_t n = h.rows();
  if (n < 3) return;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double colnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) colnorm = std::hypot(colnorm, std::abs(h(i, k)));
    if (colnorm == 0.0) continue;
    const cplx x0 = h(k + 1, k);
    const cplx phase = std::abs(x0) == 0.0 ? cplx(1.0, 0.0) : x0 / std::abs(x0);
    const cplx alpha = -phase * colnorm;
    std::vector<cplx> v(n - k - 1);
    v[0] = x0 - alpha;
    for (std::size_t i = k + 2; i < n; ++i) v[i - k - 1] = h(i, k);
    double vnorm2 = 0.0;
    for (const cplx& vi : v) vnorm2 += std::norm(vi);
    if (vnorm2 == 0.0) continue;

    // H <- (I - 2 v v^H / v^H v) H  on rows k+1..n-1
    for (std::size_t j = k; j < n; ++j) {
      cplx dot = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i)
        dot += std::conj(v[i]) * h(k + 1 + i, j);
      dot *= 2.0 / vnorm2;
      for (std::size_t i = 0; i < v.size(); ++i) h(k + 1 + i, j) -= dot * v[i];
    }
    // H <- H (I - 2 v v^H / v^H v)  on columns k+1..n-1
    for (std::size_t i = 0; i < n; ++i) {
      cplx dot = 0.0;
      for (std::size_t j = 0; j < v.size(); ++j) dot += h(i, k + 1 + j) * v[j];
      dot *= 2.0 / vnorm2;
      for (std::size_t j = 0; j < v.size(); ++j)
        h(i, k + 1 + j) -= dot * std::conj(v[j]);
    }
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

}  // namespace

EigenDecomposition jacobi_symmetric(const RealMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw InvalidArgumentError("matrix must be square");
  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      asym = std::max(asym, std::abs(a(i, j) - a(j, i)));
  if (asym >= 1e-12)
    throw InvalidArgumentError("matrix is not symmetric within 1e-12");

  RealMatrix m = a;
  RealMatrix v = RealMatrix::identity(n);
  const double norm0 = std::max(a.frobenius(), 1e-300);

  constexpr int kMaxSweeps = 30;
  int sweeps = 0;
  bool converged = false;
  for (; sweeps < kMaxSweeps; ++sweeps) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * m(i, j) * m(i, j);
    off = std::sqrt(off);
    if (off <= 1e-12 * norm0) {
      converged = true;
      break;
    }
    // Early sweeps skip elements below a shrinking threshold; later sweeps
    // rotate everything that is not negligible against its diagonal.
    const double thresh =
        sweeps < 3 ? 0.2 * off * off / static_cast<double>(n * n) : 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        const double small = 100.0 * std::abs(apq);
        if (sweeps > 3 && std::abs(m(p, p)) + small == std::abs(m(p, p)) &&
            std::abs(m(q, q)) + small == std::abs(m(q, q))) {
          m(p, q) = m(q, p) = 0.0;
          continue;
        }
        if (std::abs(apq) <= thresh) continue;
        const double theta = 0.5 * (m(q, q) - m(p, p)) / apq;
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double hpq = apq;
        m(p, p) -= t * hpq;
        m(q, q) += t * hpq;
        m(p, q) = m(q, p) = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i != p && i != q) {
            const double mip = m(i, p);
            const double miq = m(i, q);
            m(i, p) = mip - s * (miq + tau * mip);
            m(i, q) = miq + s * (mip - tau * miq);
            m(p, i) = m(i, p);
            m(q, i) = m(i, q);
          }
          const double vip = v(i, p);
          const double viq = v(i, q);
          v(i, p) = vip - s * (viq + tau * vip);
          v(i, q) = viq + s * (vip - tau * viq);
        }
      }
  }
  if (!converged)
    throw ConvergenceFailure("off-diagonal mass not eliminated in 30 sweeps",
                             0.0, sweeps);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return m(i, i) < m(j, j); });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = RealMatrix(n, n);
  out.has_vectors = true;
  out.iterations = sweeps;
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = cplx(m(order[k], order[k]), 0.0);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }

  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * out.vectors(j, k);
      acc -= out.values[k].real() * out.vectors(i, k);
      err += acc * acc;
    }
    worst = std::max(worst, std::sqrt(err));
  }
  out.residual = worst / norm0;
  return out;
}

EigenDecomposition hessenberg_qr(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw InvalidArgumentError("matrix must be square");
  EigenDecomposition out;
  if (n == 0) return out;

  ComplexMatrix h = a;
  hessenberg_reduce(h);

  const double scale = std::max(h.max_abs(), 1e-300);
  constexpr double kDeflate = 1e-14;
  constexpr int kMaxPerEigenvalue = 100;

  std::vector<cplx> values;
  values.reserve(n);
  std::size_t hi = n - 1;
  int iters = 0;
  int total_iters = 0;

  while (true) {
    // Deflate all negligible subdiagonals, then peel converged eigenvalues
    // off the bottom.
    for (std::size_t k = 1; k <= hi; ++k) {
      const double bound =
          kDeflate * (std::abs(h(k - 1, k - 1)) + std::abs(h(k, k)));
      if (std::abs(h(k, k - 1)) <= std::max(bound, kDeflate * scale))
        h(k, k - 1) = 0.0;
    }
    while (hi > 0 && h(hi, hi - 1) == cplx(0.0)) {
      values.push_back(h(hi, hi));
      --hi;
      iters = 0;
    }
    if (hi == 0) {
      values.push_back(h(0, 0));
      break;
    }

    std::size_t lo = hi;
    while (lo > 0 && h(lo, lo - 1) != cplx(0.0)) --lo;

    if (hi - lo == 1) {
      const auto pair = eig2x2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi));
      values.push_back(pair[0]);
      values.push_back(pair[1]);
      if (lo == 0) break;
      hi = lo - 1;
      iters = 0;
      continue;
    }

    ++iters;
    ++total_iters;
    if (iters > kMaxPerEigenvalue) {
      std::ostringstream msg;
      msg << "QR stalled at deflation index " << hi;
      throw ConvergenceFailure(msg.str(), std::abs(h(hi, hi - 1)), total_iters);
    }

    cplx shift;
    if (iters % 10 == 0) {
      shift = h(hi, hi) + cplx(0.75 * std::abs(h(hi, hi - 1)), 0.0);
    } else {
      const auto pair =
          eig2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
      shift = std::abs(pair[0] - h(hi, hi)) < std::abs(pair[1] - h(hi, hi))
                  ? pair[0]
                  : pair[1];
    }

    // Explicit shifted QR sweep on the active window via Givens rotations.
    const std::size_t w = hi - lo + 1;
    std::vector<double> cs(w - 1);
    std::vector<cplx> sn(w - 1);
    for (std::size_t k = lo; k < hi; ++k) h(k, k) -= shift;
    h(hi, hi) -= shift;
    for (std::size_t k = lo; k < hi; ++k) {
      givens(h(k, k), h(k + 1, k), cs[k - lo], sn[k - lo]);
      for (std::size_t j = k; j <= hi; ++j) {
        const cplx t1 = h(k, j);
        const cplx t2 = h(k + 1, j);
        h(k, j) = cs[k - lo] * t1 + sn[k - lo] * t2;
        h(k + 1, j) = -std::conj(sn[k - lo]) * t1 + cs[k - lo] * t2;
      }
    }
    for (std::size_t k = lo; k < hi; ++k) {
      const std::size_t top = lo;
      for (std::size_t i = top; i <= std::min(hi, k + 2); ++i) {
        const cplx t1 = h(i, k);
        const cplx t2 = h(i, k + 1);
        h(i, k) = cs[k - lo] * t1 + std::conj(sn[k - lo]) * t2;
        h(i, k + 1) = -sn[k - lo] * t1 + cs[k - lo] * t2;
      }
    }
    for (std::size_t k = lo; k <= hi; ++k) h(k, k) += shift;
  }

  std::sort(values.begin(), values.end(), [](const cplx& x, const cplx& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  out.values = std::move(values);
  out.iterations = total_iters;
  return out;
}

ComplexMatrix matrix_exponential(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw InvalidArgumentError("matrix must be square");

  double inf_norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(a(i, j));
    inf_norm = std::max(inf_norm, row);
  }
  int s = 0;
  if (inf_norm > 0.5)
    s = static_cast<int>(std::ceil(std::log2(inf_norm / 0.5)));

  ComplexMatrix x = a;
  const double down = std::ldexp(1.0, -s);
  x = cplx(down, 0.0) * x;

  // [6/6] Pade: c_0 = 1, c_k = c_{k-1} (6 - k + 1) / (k (12 - k + 1)).
  double c[7];
  c[0] = 1.0;
  for (int k = 1; k <= 6; ++k)
    c[k] = c[k - 1] * static_cast<double>(7 - k) /
           static_cast<double>(k * (13 - k));

  ComplexMatrix power = ComplexMatrix::identity(n);
  ComplexMatrix num(n, n);
  ComplexMatrix den(n, n);
  for (int k = 0; k <= 6; ++k) {
    if (k > 0) power = power * x;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    num = num + cplx(c[k], 0.0) * power;
    den = den + cplx(sign * c[k], 0.0) * power;
  }
  ComplexMatrix r = lu_solve(den, num);
  for (int i = 0; i < s; ++i) r = r * r;
  return r;
}

}  // namespace angulon
