#include "angulon/tensor.hpp"

#include <cmath>
#include <sstream>

#include "angulon/errors.hpp"

namespace angulon {

std::size_t ravel(const std::vector<std::size_t>& multi_index,
                  const TensorGrid& grid) {
  const std::vector<std::size_t> dims = grid.dims();
  if (multi_index.size() != dims.size())
    throw InvalidArgumentError("multi-index rank does not match grid rank");
  std::size_t r = 0;
  std::size_t stride = 1;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const std::size_t jk = multi_index[k];
    if (jk < 1 || jk > dims[k]) {
      std::ostringstream msg;
      msg << "index " << jk << " out of range 1.." << dims[k] << " on axis "
          << k + 1;
      throw InvalidArgumentError(msg.str());
    }
    r += (jk - 1) * stride;
    stride *= dims[k];
  }
  return r + 1;
}

std::vector<std::size_t> unravel(std::size_t r, const TensorGrid& grid) {
  const std::vector<std::size_t> dims = grid.dims();
  if (r < 1 || r > grid.total())
    throw InvalidArgumentError("flat index out of range");
  std::vector<std::size_t> idx(dims.size());
  std::size_t rest = r - 1;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    idx[k] = rest % dims[k] + 1;
    rest /= dims[k];
  }
  return idx;
}

KronOperator lift(const OperatorMatrix& op, std::size_t axis,
                  const TensorGrid& grid) {
  const std::vector<std::size_t> dims = grid.dims();
  if (axis < 1 || axis > dims.size())
    throw InvalidArgumentError("axis out of range");
  if (op.entries.rows() != dims[axis - 1])
    throw InvalidArgumentError("operator dimension does not match its axis");

  // Axis q is the leftmost factor, axis 1 the rightmost.
  ComplexMatrix acc = ComplexMatrix::identity(1);
  for (std::size_t k = dims.size(); k-- > 0;) {
    if (k + 1 == axis)
      acc = kron_product(acc, op.entries);
    else
      acc = kron_product(acc, ComplexMatrix::identity(dims[k]));
  }

  KronOperator out;
  out.entries = std::move(acc);
  out.grid = grid;
  std::ostringstream tag;
  tag << "axis " << axis << ": " << exactness_class_name(op.exactness.kind)
      << "(" << op.entries.rows() << ")";
  out.factors.push_back(tag.str());
  return out;
}

KronOperator diag_coeff(
    const std::function<double(const std::vector<double>&)>& f,
    const TensorGrid& grid) {
  const std::size_t total = grid.total();
  KronOperator out;
  out.entries = ComplexMatrix(total, total);
  out.grid = grid;
  out.factors.push_back("diagonal coefficient");
  for (std::size_t r = 1; r <= total; ++r) {
    const std::vector<std::size_t> idx = unravel(r, grid);
    std::vector<double> coords(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
      coords[k] = grid.axes[k].points[idx[k] - 1];
    const double v = f(coords);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "coefficient not finite at grid point " << r << " (";
      for (std::size_t k = 0; k < coords.size(); ++k)
        msg << (k ? ", " : "") << coords[k];
      msg << ")";
      throw EvaluationError(msg.str());
    }
    out.entries(r - 1, r - 1) = cplx(v, 0.0);
  }
  return out;
}

}  // namespace angulon
