#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "angulon/dense.hpp"
#include "angulon/diffmat.hpp"
#include "angulon/nodes.hpp"

namespace angulon {

// Tensor-product grid. Axis 1 is listed first and runs fastest in the flat
// index.
struct TensorGrid {
  std::vector<NodeSet> axes;

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    d.reserve(axes.size());
    for (const NodeSet& a : axes) d.push_back(a.count());
    return d;
  }

  std::size_t total() const {
    std::size_t t = 1;
    for (const NodeSet& a : axes) t *= a.count();
    return t;
  }
};

// Flat index of a 1-based multi-index:
//   r = j1 + (j2 - 1) N1 + (j3 - 1) N1 N2 + ...
// Result is 1-based. Out-of-range components are rejected.
std::size_t ravel(const std::vector<std::size_t>& multi_index,
                  const TensorGrid& grid);

// Inverse of ravel; returns the 1-based multi-index of 1-based r.
std::vector<std::size_t> unravel(std::size_t r, const TensorGrid& grid);

// Block form (a_ij * B); dimension is the product of the factor dimensions.
template <typename T>
Matrix<T> kron_product(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const T s = a(ia, ja);
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          r(ia * b.rows() + ib, ja * b.cols() + jb) = s * b(ib, jb);
    }
  return r;
}

// Operator on the full grid, kept dense. factors records which 1-D matrix
// sits on which axis.
struct KronOperator {
  ComplexMatrix entries;
  TensorGrid grid;
  std::vector<std::string> factors;
};

// Embeds a 1-D operator on one axis (1-based) with identity factors on all
// others. Axis 1 is the rightmost Kronecker factor, matching the fastest-
// running flat index.
KronOperator lift(const OperatorMatrix& op, std::size_t axis,
                  const TensorGrid& grid);

// Diagonal operator with entries f(coordinates of grid point r), r running
// over the flat index. f receives coordinates in axis order. Non-finite
// values are rejected naming the offending grid point.
KronOperator diag_coeff(
    const std::function<double(const std::vector<double>&)>& f,
    const TensorGrid& grid);

}  // namespace angulon
