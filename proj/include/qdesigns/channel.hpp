#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qdesigns/tensor.hpp"
#include "qdesigns/unitary.hpp"

namespace qdesigns {

/// CPTP map in Kraus form.
struct QuantumChannel {
  std::size_t dim = 0;
  std::vector<ComplexMatrix> kraus;

  /// Throws unless every Kraus operator is dim x dim and
  /// ||sum K^dag K - I||_F <= tol.
  void validate(double tol = kDefaultTol) const;
  double completeness_defect() const;
  ComplexMatrix apply(const ComplexMatrix& rho) const;
};

/// Choi state of Phi^{(x)t}, layout (out_1 .. out_t)(in_1 .. in_t), trace 1.
struct ChoiState {
  std::size_t dim = 0;
  int copies = 1;
  ComplexMatrix matrix;

  void validate(double tol = kDefaultTol) const;
};

struct WeightedChannelSet {
  std::size_t dim = 0;
  std::vector<QuantumChannel> channels;
  std::vector<double> weights;
  std::vector<std::string> tags;  // empty, or one label per channel

  std::size_t size() const { return channels.size(); }
  double total_weight() const;
  bool has_signed_weights() const;
  void validate(double tol = kDefaultTol) const;
};

/// sigma = (1/d) sum_{a,b} Phi(|a><b|) (x) |a><b|.
ChoiState choi_of_channel(const QuantumChannel& phi);

inline constexpr int kMaxChoiCopies = 3;

/// sigma_{Phi^{(x)t}} by reordering sigma_Phi^{(x)t} from (out in)(out in)...
/// to (out ...)(in ...).
ChoiState choi_tcopy(const QuantumChannel& phi, int t);
ChoiState choi_tcopy(const ChoiState& single, int t);

/// Kraus operators sqrt(d lambda) v from the eigendecomposition of a t = 1
/// Choi state; eigenvalues below `cutoff` are dropped.
QuantumChannel channel_from_choi(const ChoiState& sigma, double cutoff = 1e-12);

/// Haar average of sigma_{Phi^{(x)t}} over channels induced by U(dk) with a
/// pure k-dimensional environment. Requires dk >= t.
ChoiState average_choi(std::size_t d, double k, int t);

/// Haar average of sigma^{(x)t} over unistochastic channels on H_d.
ChoiState average_choi_unistochastic(std::size_t d, int t);

/// Weighted mean of choi_tcopy over the set.
ComplexMatrix weighted_average_choi(const WeightedChannelSet& s, int t);

/// ||weighted mean of sigma_{Phi_i^{(x)t}} - average_choi(d, k, t)||_HS.
double design_distance(const WeightedChannelSet& s, std::size_t d, double k, int t);

/// Same against average_choi_unistochastic(d, t).
double unistochastic_design_distance(const WeightedChannelSet& s, std::size_t d,
                                     int t);

/// Phi(rho) = Tr_E[U (rho (x) |env><env|) U^dag] on H_d (x) H_k;
/// K_l[i][a] = U[(i,l), (a,env)].
QuantumChannel channel_from_stinespring(const ComplexMatrix& U, std::size_t d,
                                        std::size_t k, std::size_t env_index = 0);

/// Xi(rho) = Tr_E[U (rho (x) I/d) U^dag] on H_d (x) H_d.
QuantumChannel unistochastic_channel(const ComplexMatrix& U, std::size_t d);

QuantumChannel unitary_channel(const ComplexMatrix& U);
QuantumChannel identity_channel(std::size_t d);
/// Kraus {I, X, Y, Z} / 2.
QuantumChannel depolarizing_qubit();
/// Kraus |0><0| and |0><1|.
QuantumChannel emission_qubit();

/// Distinct channels (Choi Frobenius distance <= 1e-8) in the image of a
/// unitary set, with their multiplicities.
struct ChannelPushforward {
  WeightedChannelSet channels;  // weights are the raw multiplicities
  std::vector<std::size_t> multiplicities;
};
ChannelPushforward stinespring_pushforward(const UnitarySet& s, std::size_t d,
                                           std::size_t k);
ChannelPushforward unistochastic_pushforward(const UnitarySet& s, std::size_t d);

/// Divides all weights by their greatest common divisor (weights must be
/// positive integers).
void reduce_integer_weights(WeightedChannelSet& s);

/// Partial-trace image of the two-qubit Clifford group on one qubit, weights
/// reduced to 1 (unitary) : 4 (Kraus rank 2). Tagged by kind.
WeightedChannelSet clifford_induced_channels();

/// The 24 Kraus-rank-2 qubit channels whose Choi states are
/// (1/2) sum_i |psi_i><psi_i| with |psi_i> = (A(x)B) CNOT_{2->1}^m (X^j(x)I)|0 i>.
/// Tagged "contraction" (6) or "mixed-unitary" (18).
WeightedChannelSet r2_channels();

/// The single-qubit Clifford group as unitary channels, unit weights.
WeightedChannelSet clifford1_channels();

/// 49 channels: C1 (weight 1), r2 (4(k-1)), depolarizing (32(k^2-3k+2)).
/// Weights are negative for 1 < k < 2.
WeightedChannelSet qubit_channel_design(double k);

/// Removes channels with zero weight (tags follow).
WeightedChannelSet drop_zero_weights(const WeightedChannelSet& s);

/// 43 channels: C1 (1), mixed-unitary r2 (12), depolarizing (240).
WeightedChannelSet unistochastic_design_qubit();

/// Label from the action of a qubit channel: "unitary", "contraction",
/// "depolarizing", "mixed-unitary" (unital, not unitary) or "other".
std::string classify_qubit_channel(const QuantumChannel& phi);

double choi_distance(const ChoiState& a, const ChoiState& b);

}  // namespace qdesigns
