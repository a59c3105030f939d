#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qdesigns {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultTol = 1e-10;

/// Local dimensions of a multipartite Hilbert space. Subsystem 0 is the
/// leftmost tensor factor, i.e. the most significant digit of a flat index.
class SubsystemShape {
 public:
  explicit SubsystemShape(std::vector<std::size_t> dims);

  /// n copies of a d-dimensional space.
  static SubsystemShape uniform(std::size_t count, std::size_t dim);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t size() const { return dims_.size(); }
  std::size_t total() const { return total_; }

  /// Mixed-radix digits of a flat index, most significant first.
  std::vector<std::size_t> digits(std::size_t flat) const;
  std::size_t flat(std::span<const std::size_t> digits) const;

 private:
  std::vector<std::size_t> dims_;
  std::size_t total_ = 1;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced operator on the subsystems listed in `keep` (kept in ascending
/// subsystem order regardless of the order given).
ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemShape& shape,
                            std::span<const std::size_t> keep);

/// Conjugation by the subsystem permutation operator. Output factor n is
/// input factor perm[n]; e.g. perm = {1, 0} maps A (x) B to B (x) A.
ComplexMatrix permute_subsystems(const ComplexMatrix& m,
                                 const SubsystemShape& shape,
                                 std::span<const std::size_t> perm);

/// sqrt(Tr(M^dagger M)).
double hs_norm(const ComplexMatrix& m);

Complex trace(const ComplexMatrix& m);

/// Frobenius norm of U^dagger U - I; +inf for non-square input.
double unitarity_defect(const ComplexMatrix& u);
bool is_unitary(const ComplexMatrix& u, double tol = kDefaultTol);
bool is_hermitian(const ComplexMatrix& m, double tol = kDefaultTol);

/// Smallest eigenvalue of the Hermitian part of m.
double min_eigenvalue(const ComplexMatrix& m);
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

ComplexMatrix projector(const ComplexVector& v);
ComplexMatrix identity(std::size_t n);

/// Integer power for small non-negative exponents of a real base.
double ipow(double base, int exponent);

/// Binomial coefficient as a double (exact for the small arguments used here).
double binomial(int n, int k);

}  // namespace qdesigns
