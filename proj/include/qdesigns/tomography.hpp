#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qdesigns/channel.hpp"
#include "qdesigns/random.hpp"
#include "qdesigns/tensor.hpp"

namespace qdesigns {

inline constexpr int kTomoBases = 5;
inline constexpr int kTomoOutcomes = 4;
inline constexpr int kTomoStates = kTomoBases * kTomoOutcomes;

/// U_0 = I, U_1 = H(x)H, U_2 = (S(x)S) U_1, U_3 = CNOT_12 CNOT_21 U_2,
/// U_4 = CNOT_21 CNOT_12 U_2.
std::vector<ComplexMatrix> mub_prep_unitaries();

/// The 20 states U_j|o>, index 4j + o.
std::vector<ComplexVector> tomography_states();

struct CountsRecord {
  double delay_us = 0.0;
  int prep_basis = 0;
  int prep_index = 0;
  int meas_basis = 0;
  int outcome = 0;
  std::uint64_t count = 0;
};

struct TomographyDataset {
  std::vector<CountsRecord> records;
  std::optional<std::uint64_t> shots;

  /// Distinct delays in order of first appearance.
  std::vector<double> delays() const;
};

/// probs[prep][meas_basis][outcome], prep = 4 * prep_basis + prep_index.
using ProbabilityTable =
    std::array<std::array<std::array<double, kTomoOutcomes>, kTomoBases>, kTomoStates>;

/// Normalized outcome frequencies at one delay. Throws InputError listing
/// missing (prep, meas, outcome) cells, duplicates, or shot mismatches.
ProbabilityTable probabilities_at_delay(const TomographyDataset& data, double delay_us);

/// Born probabilities of the ideal circuits with `channel` as the noise.
ProbabilityTable exact_probabilities(const QuantumChannel& channel);

/// Linear inversion over the 20-state MUB design for every preparation.
/// With `psd_project`, eigenvalues are clipped at zero and the trace restored.
std::vector<ComplexMatrix> reconstruct_states(const ProbabilityTable& probs,
                                              bool psd_project = false);
std::vector<ComplexMatrix> reconstruct_states(const TomographyDataset& data,
                                              double delay_us, bool psd_project = false);

/// Choi state (d = 4, t = 1) of the linear map sending inputs[i] to outputs[i],
/// via the pseudoinverse of the row-vectorized inputs.
ChoiState reconstruct_channel(const std::vector<ComplexMatrix>& inputs,
                              const std::vector<ComplexMatrix>& outputs);
/// Same with the ideal tomography projectors as inputs.
ChoiState reconstruct_channel(const std::vector<ComplexMatrix>& outputs);

/// Relabels a two-qubit Choi state (out_1 out_2)(in_1 in_2) as the t = 2 Choi
/// state of a qubit channel pair, and back.
ChoiState pair_choi_from_twoqubit(const ChoiState& sigma4);
ChoiState twoqubit_choi_from_pair(const ChoiState& sigma_pair);

ChoiState model_choi_uniform(double k);
/// Mean t = 2 Choi state of qubit_channel_design(k) with the weight of the
/// emission channel (contraction onto |0>) raised by w.
ChoiState model_choi_emission(double k, double w);

enum class KStarModel { Uniform, Emission };
std::string to_string(KStarModel m);
KStarModel parse_kstar_model(const std::string& s);

struct KStarFit {
  double k_star = 1.0;
  double epsilon_star = 0.0;
  double w = 0.0;
  KStarModel model = KStarModel::Uniform;
};

struct KStarOptions {
  double k_max = 64.0;
  double w_max = 1000.0;
  int grid_points = 64;
  double param_tol = 1e-10;
};

/// Minimizes the Hilbert-Schmidt distance to the model over k in [1, k_max]
/// (and w in [0, w_max] for the emission model).
KStarFit fit_kstar(const ChoiState& sigma, KStarModel model,
                   const KStarOptions& options = {});

double kstar_objective(const ChoiState& sigma, KStarModel model, double k, double w);

/// Multinomial outcome counts for the 100 circuits with `channel` (d = 4) as
/// the noise, tagged with `delay_us`.
TomographyDataset simulate_counts(const QuantumChannel& channel, std::uint64_t shots,
                                  RngStream& rng, double delay_us = 0.0);

/// Header delay_us,prep_basis,prep_index,meas_basis,outcome,count.
TomographyDataset read_counts_csv(std::istream& in);
void write_counts_csv(std::ostream& out, const TomographyDataset& data);

struct DelayFit {
  double delay_us = 0.0;
  KStarFit fit;
};

/// Per delay: reconstruct, pair, fit.
std::vector<DelayFit> fit_dataset(const TomographyDataset& data, KStarModel model,
                                  const KStarOptions& options = {});

/// Header delay_us,k_star,epsilon_star,w,model.
void write_fit_csv(std::ostream& out, const std::vector<DelayFit>& fits);

}  // namespace qdesigns
