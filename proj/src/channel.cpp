#include "qdesigns/channel.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "qdesigns/errors.hpp"
#include "qdesigns/gates.hpp"
#include "qdesigns/weingarten.hpp"

namespace qdesigns {

void QuantumChannel::validate(double tol) const {
  if (kraus.empty()) throw ValidationError("QuantumChannel: no Kraus operators");
  for (std::size_t i = 0; i < kraus.size(); ++i)
    if (static_cast<std::size_t>(kraus[i].rows()) != dim ||
        static_cast<std::size_t>(kraus[i].cols()) != dim)
      throw DimensionError("QuantumChannel: Kraus operator " + std::to_string(i) +
                           " is not " + std::to_string(dim) + "x" +
                           std::to_string(dim));
  const double defect = completeness_defect();
  if (!(defect <= tol))
    throw ValidationError("QuantumChannel: sum K^dag K deviates from I by " +
                          std::to_string(defect));
}

double QuantumChannel::completeness_defect() const {
  ComplexMatrix acc = ComplexMatrix::Zero(dim, dim);
  for (const auto& k : kraus) acc += k.adjoint() * k;
  return (acc - identity(dim)).norm();
}

ComplexMatrix QuantumChannel::apply(const ComplexMatrix& rho) const {
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (const auto& k : kraus) out += k * rho * k.adjoint();
  return out;
}

void ChoiState::validate(double tol) const {
  const auto side = static_cast<Eigen::Index>(std::pow(dim, 2 * copies));
  if (matrix.rows() != side || matrix.cols() != side)
    throw DimensionError("ChoiState: matrix side does not equal d^{2t}");
  if (!is_hermitian(matrix, tol)) throw ValidationError("ChoiState: not Hermitian");
  if (std::abs(trace(matrix) - Complex(1.0, 0.0)) > tol)
    throw ValidationError("ChoiState: trace is not 1");
  if (min_eigenvalue(matrix) < -1e-9)
    throw ValidationError("ChoiState: not positive semidefinite");
}

double WeightedChannelSet::total_weight() const {
  double w = 0.0;
  for (double x : weights) w += x;
  return w;
}

bool WeightedChannelSet::has_signed_weights() const {
  for (double w : weights)
    if (w < 0.0) return true;
  return false;
}

void WeightedChannelSet::validate(double tol) const {
  if (channels.size() != weights.size())
    throw ValidationError("WeightedChannelSet: channels/weights length mismatch");
  if (!tags.empty() && tags.size() != channels.size())
    throw ValidationError("WeightedChannelSet: tags length mismatch");
  double abs_sum = 0.0;
  for (std::size_t i = 0; i < channels.size(); ++i) {
    if (channels[i].dim != dim)
      throw DimensionError("WeightedChannelSet: channel " + std::to_string(i) +
                           " has wrong dimension");
    channels[i].validate(tol);
    abs_sum += std::abs(weights[i]);
  }
  if (!(abs_sum > 0.0)) throw ValidationError("WeightedChannelSet: all weights zero");
}

ChoiState choi_of_channel(const QuantumChannel& phi) {
  phi.validate();
  const std::size_t d = phi.dim;
  ComplexMatrix m = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& k : phi.kraus) {
    ComplexVector v(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t a = 0; a < d; ++a) v(i * d + a) = k(i, a);
    m += v * v.adjoint();
  }
  return {d, 1, m / static_cast<double>(d)};
}

ChoiState choi_tcopy(const ChoiState& single, int t) {
  if (single.copies != 1) throw DimensionError("choi_tcopy: expects a t = 1 Choi state");
  if (t < 1) throw DomainError("choi_tcopy: t must be >= 1");
  if (t > kMaxChoiCopies)
    throw CapacityError("choi_tcopy: t = " + std::to_string(t) +
                        " exceeds the supported maximum of " +
                        std::to_string(kMaxChoiCopies));
  if (t == 1) return single;
  ComplexMatrix m = single.matrix;
  for (int c = 1; c < t; ++c) m = kron(m, single.matrix);
  const auto n = static_cast<std::size_t>(t);
  std::vector<std::size_t> perm(2 * n);
  for (std::size_t c = 0; c < n; ++c) {
    perm[c] = 2 * c;
    perm[n + c] = 2 * c + 1;
  }
  return {single.dim, t, permute_subsystems(m, SubsystemShape::uniform(2 * n, single.dim), perm)};
}

ChoiState choi_tcopy(const QuantumChannel& phi, int t) {
  return choi_tcopy(choi_of_channel(phi), t);
}

QuantumChannel channel_from_choi(const ChoiState& sigma, double cutoff) {
  if (sigma.copies != 1) throw DimensionError("channel_from_choi: expects t = 1");
  const std::size_t d = sigma.dim;
  const ComplexMatrix h = 0.5 * (sigma.matrix + sigma.matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success)
    throw NumericError("channel_from_choi: eigendecomposition failed");
  QuantumChannel out;
  out.dim = d;
  for (Eigen::Index e = es.eigenvalues().size(); e-- > 0;) {
    const double lambda = es.eigenvalues()(e);
    if (lambda < -1e-9) throw ValidationError("channel_from_choi: Choi state not PSD");
    if (lambda <= cutoff) continue;
    const ComplexVector v = std::sqrt(static_cast<double>(d) * lambda) * es.eigenvectors().col(e);
    ComplexMatrix k(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t a = 0; a < d; ++a) k(i, a) = v(i * d + a);
    out.kraus.push_back(std::move(k));
  }
  return out;
}

namespace {

// (1/prefactor) sum_{sigma,tau} Wg(sigma tau^-1, D) weight(sigma, tau)
//   prod_n delta(a_n, b_sigma(n)) delta(i_n, j_tau(n)),
// rows (i_1..i_t, a_1..a_t), tau acting on outputs, sigma on inputs.
template <typename Weight>
ComplexMatrix weingarten_average(std::size_t d, int t, double D, double prefactor,
                                 Weight weight) {
  const auto group = enumerate_symmetric_group(t);
  const auto wg = weingarten_table(t, D);
  const auto n = static_cast<std::size_t>(t);
  const SubsystemShape shape = SubsystemShape::uniform(2 * n, d);
  const std::size_t side = shape.total();
  ComplexMatrix out = ComplexMatrix::Zero(side, side);
  std::vector<std::size_t> col(2 * n);
  for (const auto& sigma : group) {
    for (const auto& tau : group) {
      const double c = (*wg)(sigma.compose(tau.inverse())) * weight(sigma, tau) / prefactor;
      if (c == 0.0) continue;
      for (std::size_t r = 0; r < side; ++r) {
        const auto dig = shape.digits(r);
        for (std::size_t m = 0; m < n; ++m) {
          col[static_cast<std::size_t>(tau(static_cast<int>(m)))] = dig[m];
          col[n + static_cast<std::size_t>(sigma(static_cast<int>(m)))] = dig[n + m];
        }
        out(r, shape.flat(col)) += c;
      }
    }
  }
  return out;
}

}  // namespace

ChoiState average_choi(std::size_t d, double k, int t) {
  if (d < 1) throw DomainError("average_choi: d must be >= 1");
  if (!(k >= 1.0)) throw DomainError("average_choi: k must be >= 1");
  const double D = static_cast<double>(d) * k;
  if (D < t)
    throw DomainError("average_choi: dk = " + std::to_string(D) + " is below t = " +
                      std::to_string(t));
  const ComplexMatrix m = weingarten_average(
      d, t, D, ipow(static_cast<double>(d), t),
      [k](const Permutation&, const Permutation& tau) {
        return std::pow(k, tau.cycle_count());
      });
  return {d, t, m};
}

ChoiState average_choi_unistochastic(std::size_t d, int t) {
  const double dd = static_cast<double>(d);
  if (dd * dd < t)
    throw DomainError("average_choi_unistochastic: d^2 is below t");
  const ComplexMatrix m = weingarten_average(
      d, t, dd * dd, ipow(dd, 2 * t),
      [dd](const Permutation& sigma, const Permutation& tau) {
        return ipow(dd, sigma.cycle_count() + tau.cycle_count());
      });
  return {d, t, m};
}

ComplexMatrix weighted_average_choi(const WeightedChannelSet& s, int t) {
  const double w = s.total_weight();
  if (w == 0.0) throw ValidationError("weighted_average_choi: weights sum to zero");
  const auto side = static_cast<Eigen::Index>(std::pow(s.dim, 2 * t));
  ComplexMatrix acc = ComplexMatrix::Zero(side, side);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.weights[i] == 0.0) continue;
    acc += s.weights[i] * choi_tcopy(s.channels[i], t).matrix;
  }
  return acc / w;
}

double design_distance(const WeightedChannelSet& s, std::size_t d, double k, int t) {
  if (s.dim != d) throw DimensionError("design_distance: set dimension mismatch");
  return hs_norm(weighted_average_choi(s, t) - average_choi(d, k, t).matrix);
}

double unistochastic_design_distance(const WeightedChannelSet& s, std::size_t d,
                                     int t) {
  if (s.dim != d)
    throw DimensionError("unistochastic_design_distance: set dimension mismatch");
  return hs_norm(weighted_average_choi(s, t) - average_choi_unistochastic(d, t).matrix);
}

QuantumChannel channel_from_stinespring(const ComplexMatrix& U, std::size_t d,
                                        std::size_t k, std::size_t env_index) {
  if (static_cast<std::size_t>(U.rows()) != d * k || U.cols() != U.rows())
    throw DimensionError("channel_from_stinespring: U must be dk x dk");
  if (env_index >= k) throw DimensionError("channel_from_stinespring: env index out of range");
  if (!is_unitary(U)) throw ValidationError("channel_from_stinespring: U is not unitary");
  QuantumChannel out;
  out.dim = d;
  for (std::size_t l = 0; l < k; ++l) {
    ComplexMatrix kr(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t a = 0; a < d; ++a) kr(i, a) = U(i * k + l, a * k + env_index);
    out.kraus.push_back(std::move(kr));
  }
  return out;
}

QuantumChannel unistochastic_channel(const ComplexMatrix& U, std::size_t d) {
  if (static_cast<std::size_t>(U.rows()) != d * d || U.cols() != U.rows())
    throw DimensionError("unistochastic_channel: U must be d^2 x d^2");
  if (!is_unitary(U)) throw ValidationError("unistochastic_channel: U is not unitary");
  QuantumChannel out;
  out.dim = d;
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t o = 0; o < d; ++o) {
      ComplexMatrix kr(d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t a = 0; a < d; ++a) kr(i, a) = scale * U(i * d + l, a * d + o);
      out.kraus.push_back(std::move(kr));
    }
  return out;
}

QuantumChannel unitary_channel(const ComplexMatrix& U) {
  if (!is_unitary(U)) throw ValidationError("unitary_channel: U is not unitary");
  return {static_cast<std::size_t>(U.rows()), {U}};
}

QuantumChannel identity_channel(std::size_t d) { return {d, {identity(d)}}; }

QuantumChannel depolarizing_qubit() {
  return {2, {0.5 * identity(2), 0.5 * gates::pauli_x(), 0.5 * gates::pauli_y(),
              0.5 * gates::pauli_z()}};
}

QuantumChannel emission_qubit() {
  ComplexMatrix k0 = ComplexMatrix::Zero(2, 2), k1 = ComplexMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k1(0, 1) = 1.0;
  return {2, {k0, k1}};
}

double choi_distance(const ChoiState& a, const ChoiState& b) {
  if (a.matrix.rows() != b.matrix.rows())
    throw DimensionError("choi_distance: size mismatch");
  return (a.matrix - b.matrix).norm();
}

namespace {

constexpr double kChannelMergeTol = 1e-8;

template <typename Make>
ChannelPushforward pushforward(const UnitarySet& s, std::size_t d, Make make) {
  ChannelPushforward out;
  out.channels.dim = d;
  std::vector<ComplexMatrix> chois;
  for (const auto& u : s.elements) {
    QuantumChannel ch = make(u);
    ComplexMatrix c = choi_of_channel(ch).matrix;
    bool found = false;
    for (std::size_t j = 0; j < chois.size(); ++j) {
      if ((chois[j] - c).norm() <= kChannelMergeTol) {
        ++out.multiplicities[j];
        found = true;
        break;
      }
    }
    if (!found) {
      chois.push_back(std::move(c));
      out.channels.channels.push_back(std::move(ch));
      out.multiplicities.push_back(1);
    }
  }
  for (std::size_t m : out.multiplicities)
    out.channels.weights.push_back(static_cast<double>(m));
  return out;
}

void tag_by_kind(WeightedChannelSet& s) {
  s.tags.clear();
  for (const auto& ch : s.channels) s.tags.push_back(classify_qubit_channel(ch));
}

}  // namespace

ChannelPushforward stinespring_pushforward(const UnitarySet& s, std::size_t d,
                                           std::size_t k) {
  if (s.dim != d * k)
    throw DimensionError("stinespring_pushforward: set dimension is not dk");
  return pushforward(s, d, [&](const ComplexMatrix& u) {
    return channel_from_stinespring(u, d, k, 0);
  });
}

ChannelPushforward unistochastic_pushforward(const UnitarySet& s, std::size_t d) {
  if (s.dim != d * d)
    throw DimensionError("unistochastic_pushforward: set dimension is not d^2");
  return pushforward(s, d, [&](const ComplexMatrix& u) {
    return unistochastic_channel(u, d);
  });
}

void reduce_integer_weights(WeightedChannelSet& s) {
  long long g = 0;
  for (double w : s.weights) {
    const long long iw = std::llround(w);
    if (iw <= 0 || static_cast<double>(iw) != w)
      throw ValidationError("reduce_integer_weights: weights must be positive integers");
    g = std::gcd(g, iw);
  }
  if (g > 1)
    for (double& w : s.weights) w /= static_cast<double>(g);
}

WeightedChannelSet clifford_induced_channels() {
  auto push = stinespring_pushforward(clifford_group(2), 2, 2);
  reduce_integer_weights(push.channels);
  tag_by_kind(push.channels);
  return push.channels;
}

WeightedChannelSet clifford1_channels() {
  const UnitarySet c1 = clifford_group(1);
  WeightedChannelSet out;
  out.dim = 2;
  for (const auto& u : c1.elements) {
    out.channels.push_back(unitary_channel(u));
    out.weights.push_back(1.0);
    out.tags.emplace_back("unitary");
  }
  return out;
}

WeightedChannelSet r2_channels() {
  const ComplexMatrix h = gates::hadamard(), s = gates::phase();
  const ComplexMatrix local[3] = {identity(2), h, s * h};
  const ComplexMatrix cnot21 = gates::cnot(1, 0, 2);
  const ComplexMatrix x1 = gates::on_qubit(gates::pauli_x(), 0, 2);

  WeightedChannelSet out;
  out.dim = 2;
  std::vector<ComplexMatrix> chois;
  for (int m = 0; m < 2; ++m)
    for (int j = 0; j < 2; ++j)
      for (const auto& a : local)
        for (const auto& b : local) {
          ComplexMatrix circuit = kron(a, b) * (m ? cnot21 : identity(4)) *
                                  (j ? x1 : identity(4));
          // Column i of the circuit is the image of |0 i>; its entries
          // indexed (out, in) give a Kraus operator directly.
          QuantumChannel ch;
          ch.dim = 2;
          for (int i = 0; i < 2; ++i) {
            ComplexMatrix k(2, 2);
            for (int o = 0; o < 2; ++o)
              for (int in = 0; in < 2; ++in) k(o, in) = circuit(o * 2 + in, i);
            ch.kraus.push_back(std::move(k));
          }
          ComplexMatrix c = choi_of_channel(ch).matrix;
          bool dup = false;
          for (const auto& prev : chois)
            if ((prev - c).norm() <= kChannelMergeTol) {
              dup = true;
              break;
            }
          if (dup) continue;
          chois.push_back(std::move(c));
          out.channels.push_back(std::move(ch));
          out.weights.push_back(1.0);
        }
  tag_by_kind(out);
  return out;
}

WeightedChannelSet qubit_channel_design(double k) {
  if (!(k >= 1.0)) throw DomainError("qubit_channel_design: k must be >= 1");
  WeightedChannelSet out = clifford1_channels();
  const WeightedChannelSet r2 = r2_channels();
  const double b = 4.0 * (k - 1.0);
  const double c = 32.0 * (k * k - 3.0 * k + 2.0);
  for (std::size_t i = 0; i < r2.size(); ++i) {
    out.channels.push_back(r2.channels[i]);
    out.weights.push_back(b);
    out.tags.push_back(r2.tags[i]);
  }
  out.channels.push_back(depolarizing_qubit());
  out.weights.push_back(c);
  out.tags.emplace_back("depolarizing");
  return out;
}

WeightedChannelSet drop_zero_weights(const WeightedChannelSet& s) {
  WeightedChannelSet out;
  out.dim = s.dim;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.weights[i] == 0.0) continue;
    out.channels.push_back(s.channels[i]);
    out.weights.push_back(s.weights[i]);
    if (!s.tags.empty()) out.tags.push_back(s.tags[i]);
  }
  return out;
}

WeightedChannelSet unistochastic_design_qubit() {
  WeightedChannelSet out = clifford1_channels();
  const WeightedChannelSet r2 = r2_channels();
  for (std::size_t i = 0; i < r2.size(); ++i) {
    if (r2.tags[i] != "mixed-unitary") continue;
    out.channels.push_back(r2.channels[i]);
    out.weights.push_back(12.0);
    out.tags.push_back(r2.tags[i]);
  }
  out.channels.push_back(depolarizing_qubit());
  out.weights.push_back(240.0);
  out.tags.emplace_back("depolarizing");
  return out;
}

std::string classify_qubit_channel(const QuantumChannel& phi) {
  if (phi.dim != 2) return "other";
  const ChoiState c = choi_of_channel(phi);
  const double purity = (c.matrix * c.matrix).trace().real();
  if (std::abs(purity - 1.0) <= 1e-9) return "unitary";
  if ((c.matrix - identity(4) / 4.0).norm() <= 1e-9) return "depolarizing";
  ComplexMatrix e00 = ComplexMatrix::Zero(2, 2), e11 = e00, e01 = e00;
  e00(0, 0) = 1.0;
  e11(1, 1) = 1.0;
  e01(0, 1) = 1.0;
  const ComplexMatrix out0 = phi.apply(e00), out1 = phi.apply(e11);
  if ((out0 - out1).norm() <= 1e-9 && phi.apply(e01).norm() <= 1e-9)
    return "contraction";
  if ((out0 + out1 - identity(2)).norm() <= 1e-9) return "mixed-unitary";
  return "other";
}

}  // namespace qdesigns
