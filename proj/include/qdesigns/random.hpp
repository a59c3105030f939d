#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

#include "qdesigns/channel.hpp"
#include "qdesigns/tensor.hpp"

namespace qdesigns {

/// Seeded 64-bit Mersenne Twister. Substreams for parallel work are derived
/// as splitmix64(seed ^ splitmix64(stream_index + 1)).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_index = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_; }
  static constexpr const char* algorithm() { return "mt19937_64/splitmix64"; }

  double normal();
  double uniform();
  std::mt19937_64& engine() { return engine_; }

  static std::uint64_t splitmix64(std::uint64_t x);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Entries (x + iy)/sqrt(2), x, y standard normal.
ComplexMatrix ginibre(std::size_t rows, std::size_t cols, RngStream& rng);
/// (G + G^dag)/2.
ComplexMatrix gue(std::size_t d, RngStream& rng);
/// G G^dag with G of size d x s.
ComplexMatrix wishart(std::size_t d, std::size_t s, RngStream& rng);
/// QR of a Ginibre matrix with the phases of diag(R) absorbed into Q.
ComplexMatrix haar_unitary(std::size_t d, RngStream& rng);

inline constexpr int kMaxResamples = 3;

/// K_i = G_i H^{-1/2}, H = sum G_i^dag G_i, with s Ginibre d x d matrices.
QuantumChannel sample_kraus_channel(std::size_t d, std::size_t s, RngStream& rng);
/// sigma = (I (x) H^{-1/2}) W (I (x) H^{-1/2}) / d, W Wishart on d^2 with
/// parameter s and H = Tr_out W.
ChoiState sample_choi_channel(std::size_t d, std::size_t s, RngStream& rng);
/// channel_from_stinespring(haar_unitary(dM), d, M).
QuantumChannel sample_stinespring_channel(std::size_t d, std::size_t m, RngStream& rng);

/// Entrywise mean and standard error of sample matrices.
struct MatrixStats {
  std::size_t count = 0;
  ComplexMatrix mean;
  Eigen::MatrixXd se_re;
  Eigen::MatrixXd se_im;
};

/// Draws `samples` matrices via sampler(rng) and accumulates entrywise
/// statistics. Sample j uses substream j / chunk of `seed`, so results do not
/// depend on `threads`.
MatrixStats monte_carlo(const std::function<ComplexMatrix(RngStream&)>& sampler,
                        std::size_t samples, std::uint64_t seed,
                        std::size_t threads = 1, std::size_t chunk = 1000);

/// Max over entries of |a.mean - b| / a.se (real and imaginary parts);
/// differences within `abs_tol` count as zero.
double max_z_score(const MatrixStats& a, const ComplexMatrix& b, double abs_tol = 1e-12);
/// Two-sample version with combined error sqrt(se_a^2 + se_b^2).
double max_z_score(const MatrixStats& a, const MatrixStats& b, double abs_tol = 1e-12);

}  // namespace qdesigns
