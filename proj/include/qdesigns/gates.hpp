#pragma once

#include <cstddef>

#include "qdesigns/tensor.hpp"

// Standard qubit gates. Qubit 0 is the leftmost tensor factor.
namespace qdesigns::gates {

ComplexMatrix hadamard();
ComplexMatrix phase();  // diag(1, i)
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Single-qubit gate g acting on `qubit` of an n-qubit register.
ComplexMatrix on_qubit(const ComplexMatrix& g, std::size_t qubit, std::size_t n);

/// CNOT with the given control and target on an n-qubit register.
ComplexMatrix cnot(std::size_t control, std::size_t target, std::size_t n);

ComplexMatrix swap2();

}  // namespace qdesigns::gates
