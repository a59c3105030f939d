#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qdesigns/projective.hpp"
#include "qdesigns/tensor.hpp"

namespace qdesigns {

struct UnitarySet {
  std::size_t dim = 0;
  std::vector<ComplexMatrix> elements;
  std::vector<double> weights;

  std::size_t size() const { return elements.size(); }
  double total_weight() const;
  void validate(double tol = kDefaultTol) const;
};

/// Multiplies by a global phase so that the first entry (row-major) with
/// modulus above 1e-8 is real and positive. Idempotent bitwise.
ComplexMatrix canonical_phase(const ComplexMatrix& u);

/// Lookup of unitaries modulo global phase, keyed on the canonical form
/// rounded to 12 decimal digits.
class PhaseCanonicalIndex {
 public:
  /// Returns the index of an equivalent element, if present.
  std::optional<std::size_t> find(const ComplexMatrix& u) const;
  /// Inserts u under `index` unless an equivalent element exists; returns
  /// true on insertion.
  bool insert(const ComplexMatrix& u, std::size_t index);
  std::size_t size() const { return map_.size(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<long long>& k) const;
  };
  static std::vector<long long> key(const ComplexMatrix& u);
  std::unordered_map<std::vector<long long>, std::size_t, KeyHash> map_;
};

inline constexpr std::size_t kMaxPauliQubits = 5;

/// All 4^{n+1} phased Pauli operators i^l P_1 (x) ... (x) P_n, with
/// P = X^j Z^k; unit weights. Contains each operator with all four phases.
UnitarySet pauli_group(std::size_t n);

/// Merges phase-equivalent elements, summing their weights (first
/// representative kept, canonicalized).
UnitarySet canonicalize_set(const UnitarySet& s);

/// Closure of {H_i, S_i, CNOT_{i->j}} modulo global phase, n in {1, 2}.
/// Elements in breadth-first discovery order starting from the identity.
UnitarySet clifford_group(std::size_t n);

/// sum_a sum_{ij} w_i w_j |<a|U_i^dag U_j|a>|^{2t} - d W^2 / C(d+t-1, t).
double unitary_design_residual(const UnitarySet& s, int t);
double unitary_design_bound(const UnitarySet& s, int t);
DesignCheck is_unitary_design(const UnitarySet& s, int t, double tol = 1e-9);

/// States U_i|psi>, merging those with overlap-squared >= 1 - 1e-10.
WeightedStateSet orbit_state(const UnitarySet& s, const ComplexVector& psi);

}  // namespace qdesigns
