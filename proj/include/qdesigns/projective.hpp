#pragma once

#include <cstddef>
#include <vector>

#include "qdesigns/tensor.hpp"

namespace qdesigns {

/// Pure states with positive weights. Weights need not be normalized.
struct WeightedStateSet {
  std::size_t dim = 0;
  std::vector<ComplexVector> states;
  std::vector<double> weights;

  std::size_t size() const { return states.size(); }
  double total_weight() const;

  /// Throws ValidationError unless states are unit vectors of length dim and
  /// weights are positive.
  void validate(double tol = kDefaultTol) const;

  static WeightedStateSet uniform(std::size_t dim,
                                  std::vector<ComplexVector> states);
};

/// An orthonormal basis stored as the columns of a unitary matrix.
using Basis = ComplexMatrix;

/// Sum over pairs of w_i w_j |<psi_i|psi_j>|^{2t}.
double welch_sum(const WeightedStateSet& s, int t);
/// W^2 / C(d+t-1, t).
double welch_bound(std::size_t d, double total_weight, int t);

struct DesignCheck {
  bool passed = false;
  double residual = 0.0;  // value minus bound (or max moment error)
  double bound = 0.0;
};

/// Welch saturation: passes iff sum - bound <= tol * bound.
DesignCheck is_projective_design(const WeightedStateSet& s, int t,
                                 double tol = 1e-10);

ComplexVector sic_fiducial_d3(double theta);

/// Generalized Pauli shift X|j> = |j+1> and clock Z|j> = omega^j |j>.
ComplexMatrix shift_matrix(std::size_t d);
ComplexMatrix clock_matrix(std::size_t d);

/// The d^2 states X^a Z^b |fiducial>, ordered a-major, unit weights.
WeightedStateSet wh_orbit(const ComplexVector& fiducial, std::size_t d);

/// d+1 mutually unbiased bases for d in {2, 3, 4}. For d = 4 these are the
/// columns of the five preparation unitaries of mub_prep_unitaries().
std::vector<Basis> mub_family(std::size_t d);

/// Five bases in d = 4 whose states all share one amplitude multiset.
std::vector<Basis> isocoherent_mub();

/// The amplitudes (p0, p1, p2, p3) used by isocoherent_mub().
std::vector<double> isocoherent_amplitudes();

/// Unit-weight state set holding every column of every basis.
WeightedStateSet states_of_bases(const std::vector<Basis>& bases);

/// Sort-and-median L1 mismatch between the computational-basis probability
/// vectors of all states U|psi> (psi a column of a basis in mub).
double isocoherence_cost(const ComplexMatrix& U, const std::vector<Basis>& mub);

/// Linear inversion rho = d(d+1)/W sum_i w_i p_i |psi_i><psi_i| - I where
/// p_i = <psi_i|rho|psi_i>.
ComplexMatrix state_reconstruct(const WeightedStateSet& design,
                                const std::vector<double>& probs);

/// Born probabilities <psi_i|rho|psi_i>, the forward map of state_reconstruct.
std::vector<double> born_probabilities(const WeightedStateSet& design,
                                       const ComplexMatrix& rho);

}  // namespace qdesigns
