#include "qdesigns/gates.hpp"

#include <cmath>

#include "qdesigns/errors.hpp"

namespace qdesigns::gates {

ComplexMatrix hadamard() {
  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

ComplexMatrix phase() {
  ComplexMatrix s = ComplexMatrix::Identity(2, 2);
  s(1, 1) = Complex(0.0, 1.0);
  return s;
}

ComplexMatrix pauli_x() {
  ComplexMatrix x = ComplexMatrix::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1.0;
  return x;
}

ComplexMatrix pauli_y() {
  ComplexMatrix y = ComplexMatrix::Zero(2, 2);
  y(0, 1) = Complex(0.0, -1.0);
  y(1, 0) = Complex(0.0, 1.0);
  return y;
}

ComplexMatrix pauli_z() {
  ComplexMatrix z = ComplexMatrix::Identity(2, 2);
  z(1, 1) = -1.0;
  return z;
}

ComplexMatrix on_qubit(const ComplexMatrix& g, std::size_t qubit, std::size_t n) {
  if (qubit >= n) throw DimensionError("on_qubit: qubit index out of range");
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (std::size_t q = 0; q < n; ++q)
    out = kron(out, q == qubit ? g : identity(2));
  return out;
}

ComplexMatrix cnot(std::size_t control, std::size_t target, std::size_t n) {
  if (control >= n || target >= n || control == target)
    throw DimensionError("cnot: invalid control/target");
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t cbit = std::size_t{1} << (n - 1 - control);
  const std::size_t tbit = std::size_t{1} << (n - 1 - target);
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    out((i & cbit) ? (i ^ tbit) : i, i) = 1.0;
  return out;
}

ComplexMatrix swap2() {
  ComplexMatrix s = ComplexMatrix::Zero(4, 4);
  s(0, 0) = s(3, 3) = 1.0;
  s(1, 2) = s(2, 1) = 1.0;
  return s;
}

}  // namespace qdesigns::gates
