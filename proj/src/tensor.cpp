#include "qdesigns/tensor.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "qdesigns/errors.hpp"

namespace qdesigns {

SubsystemShape::SubsystemShape(std::vector<std::size_t> dims)
    : dims_(std::move(dims)) {
  for (std::size_t d : dims_) {
    if (d == 0) throw DimensionError("SubsystemShape: zero local dimension");
    total_ *= d;
  }
}

SubsystemShape SubsystemShape::uniform(std::size_t count, std::size_t dim) {
  return SubsystemShape(std::vector<std::size_t>(count, dim));
}

std::vector<std::size_t> SubsystemShape::digits(std::size_t flat) const {
  std::vector<std::size_t> out(dims_.size());
  for (std::size_t n = dims_.size(); n-- > 0;) {
    out[n] = flat % dims_[n];
    flat /= dims_[n];
  }
  return out;
}

std::size_t SubsystemShape::flat(std::span<const std::size_t> digits) const {
  std::size_t idx = 0;
  for (std::size_t n = 0; n < dims_.size(); ++n) idx = idx * dims_[n] + digits[n];
  return idx;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index p = b.rows(), q = b.cols();
  ComplexMatrix out(a.rows() * p, a.cols() * q);
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      out.block(r * p, c * q, p, q) = a(r, c) * b;
  return out;
}

namespace {

void require_square_shape(const ComplexMatrix& m, const SubsystemShape& shape,
                          const char* what) {
  if (m.rows() != m.cols())
    throw DimensionError(std::string(what) + ": matrix is not square");
  if (static_cast<std::size_t>(m.rows()) != shape.total())
    throw DimensionError(std::string(what) + ": shape product " +
                         std::to_string(shape.total()) +
                         " does not match matrix side " +
                         std::to_string(m.rows()));
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemShape& shape,
                            std::span<const std::size_t> keep) {
  require_square_shape(m, shape, "partial_trace");
  std::vector<bool> kept(shape.size(), false);
  for (std::size_t k : keep) {
    if (k >= shape.size())
      throw DimensionError("partial_trace: subsystem index out of range");
    kept[k] = true;
  }

  std::size_t kept_dim = 1, traced_dim = 1;
  for (std::size_t n = 0; n < shape.size(); ++n)
    (kept[n] ? kept_dim : traced_dim) *= shape.dims()[n];

  // Split every flat index into (kept, traced) parts once.
  const std::size_t total = shape.total();
  std::vector<std::size_t> kept_idx(total), traced_idx(total);
  for (std::size_t i = 0; i < total; ++i) {
    const auto dig = shape.digits(i);
    std::size_t ki = 0, ti = 0;
    for (std::size_t n = 0; n < shape.size(); ++n) {
      if (kept[n])
        ki = ki * shape.dims()[n] + dig[n];
      else
        ti = ti * shape.dims()[n] + dig[n];
    }
    kept_idx[i] = ki;
    traced_idx[i] = ti;
  }
  std::vector<std::vector<std::size_t>> by_traced(traced_dim);
  for (std::size_t i = 0; i < total; ++i) by_traced[traced_idx[i]].push_back(i);

  ComplexMatrix out = ComplexMatrix::Zero(kept_dim, kept_dim);
  for (const auto& group : by_traced)
    for (std::size_t i : group)
      for (std::size_t j : group) out(kept_idx[i], kept_idx[j]) += m(i, j);
  return out;
}

ComplexMatrix permute_subsystems(const ComplexMatrix& m,
                                 const SubsystemShape& shape,
                                 std::span<const std::size_t> perm) {
  require_square_shape(m, shape, "permute_subsystems");
  if (perm.size() != shape.size())
    throw DimensionError("permute_subsystems: permutation length mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t p : perm) {
    if (p >= perm.size() || seen[p])
      throw DimensionError("permute_subsystems: not a bijection");
    seen[p] = true;
  }

  std::vector<std::size_t> new_dims(perm.size());
  for (std::size_t n = 0; n < perm.size(); ++n) new_dims[n] = shape.dims()[perm[n]];
  const SubsystemShape target(new_dims);

  const std::size_t total = shape.total();
  std::vector<std::size_t> map(total);
  std::vector<std::size_t> moved(perm.size());
  for (std::size_t i = 0; i < total; ++i) {
    const auto dig = shape.digits(i);
    for (std::size_t n = 0; n < perm.size(); ++n) moved[n] = dig[perm[n]];
    map[i] = target.flat(moved);
  }

  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j) out(map[i], map[j]) = m(i, j);
  return out;
}

double hs_norm(const ComplexMatrix& m) { return m.norm(); }

Complex trace(const ComplexMatrix& m) { return m.trace(); }

double unitarity_defect(const ComplexMatrix& u) {
  if (u.rows() != u.cols() || u.rows() == 0)
    return std::numeric_limits<double>::infinity();
  return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm();
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  return unitarity_defect(u) <= tol;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && (m - m.adjoint()).norm() <= tol;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double min_eigenvalue(const ComplexMatrix& m) {
  return hermitian_eigenvalues(m).minCoeff();
}

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

ComplexMatrix identity(std::size_t n) {
  return ComplexMatrix::Identity(static_cast<Eigen::Index>(n),
                                 static_cast<Eigen::Index>(n));
}

double ipow(double base, int exponent) {
  double r = 1.0;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace qdesigns
