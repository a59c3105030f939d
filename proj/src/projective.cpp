#include "qdesigns/projective.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qdesigns/errors.hpp"
#include "qdesigns/gates.hpp"

namespace qdesigns {

double WeightedStateSet::total_weight() const {
  double w = 0.0;
  for (double x : weights) w += x;
  return w;
}

void WeightedStateSet::validate(double tol) const {
  if (states.size() != weights.size())
    throw ValidationError("WeightedStateSet: states/weights length mismatch");
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (static_cast<std::size_t>(states[i].size()) != dim)
      throw DimensionError("WeightedStateSet: state " + std::to_string(i) +
                           " has wrong dimension");
    if (std::abs(states[i].norm() - 1.0) > tol)
      throw ValidationError("WeightedStateSet: state " + std::to_string(i) +
                            " is not normalized");
    if (!(weights[i] > 0.0))
      throw ValidationError("WeightedStateSet: weight " + std::to_string(i) +
                            " is not positive");
  }
}

WeightedStateSet WeightedStateSet::uniform(std::size_t dim,
                                           std::vector<ComplexVector> states) {
  WeightedStateSet s;
  s.dim = dim;
  s.weights.assign(states.size(), 1.0);
  s.states = std::move(states);
  return s;
}

double welch_sum(const WeightedStateSet& s, int t) {
  if (s.states.empty()) throw ValidationError("welch_sum: empty state set");
  if (t < 1) throw DomainError("welch_sum: t must be >= 1");
  const std::size_t n = s.size();
  double diag = 0.0, off = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    diag += s.weights[i] * s.weights[i] * ipow(s.states[i].squaredNorm(), t);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double ov = std::norm(s.states[i].dot(s.states[j]));
      off += s.weights[i] * s.weights[j] * ipow(ov, t);
    }
  }
  return diag + 2.0 * off;
}

double welch_bound(std::size_t d, double total_weight, int t) {
  if (t < 1) throw DomainError("welch_bound: t must be >= 1");
  return total_weight * total_weight /
         binomial(static_cast<int>(d) + t - 1, t);
}

DesignCheck is_projective_design(const WeightedStateSet& s, int t, double tol) {
  DesignCheck r;
  r.bound = welch_bound(s.dim, s.total_weight(), t);
  r.residual = welch_sum(s, t) - r.bound;
  r.passed = r.residual <= tol * r.bound;
  return r;
}

ComplexVector sic_fiducial_d3(double theta) {
  ComplexVector a(3), b(3);
  a << 0.0, 1.0, -1.0;
  b << 2.0, -1.0, -1.0;
  return std::sin(theta) * a / std::sqrt(2.0) +
         std::cos(theta) * b / std::sqrt(6.0);
}

ComplexMatrix shift_matrix(std::size_t d) {
  ComplexMatrix x = ComplexMatrix::Zero(d, d);
  for (std::size_t j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
  return x;
}

ComplexMatrix clock_matrix(std::size_t d) {
  ComplexMatrix z = ComplexMatrix::Zero(d, d);
  for (std::size_t j = 0; j < d; ++j)
    z(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * j / d);
  return z;
}

WeightedStateSet wh_orbit(const ComplexVector& fiducial, std::size_t d) {
  if (static_cast<std::size_t>(fiducial.size()) != d)
    throw DimensionError("wh_orbit: fiducial dimension mismatch");
  if (std::abs(fiducial.norm() - 1.0) > kDefaultTol)
    throw ValidationError("wh_orbit: fiducial is not normalized");
  const ComplexMatrix x = shift_matrix(d), z = clock_matrix(d);
  std::vector<ComplexVector> states;
  ComplexMatrix xa = identity(d);
  for (std::size_t a = 0; a < d; ++a) {
    ComplexMatrix zb = identity(d);
    for (std::size_t b = 0; b < d; ++b) {
      states.push_back(xa * zb * fiducial);
      zb = z * zb;
    }
    xa = x * xa;
  }
  return WeightedStateSet::uniform(d, std::move(states));
}

std::vector<Basis> mub_family(std::size_t d) {
  std::vector<Basis> out;
  if (d == 2) {
    out.push_back(identity(2));
    out.push_back(gates::hadamard());
    out.push_back(gates::phase() * gates::hadamard());
  } else if (d == 3) {
    out.push_back(identity(3));
    const double w = 2.0 * std::numbers::pi / 3.0;
    for (int b = 0; b < 3; ++b) {
      ComplexMatrix m(3, 3);
      for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j)
          m(k, j) = std::polar(1.0 / std::sqrt(3.0), w * (b * k * k + j * k));
      out.push_back(m);
    }
  } else if (d == 4) {
    const ComplexMatrix u1 = kron(gates::hadamard(), gates::hadamard());
    const ComplexMatrix u2 = kron(gates::phase(), gates::phase()) * u1;
    out.push_back(identity(4));
    out.push_back(u1);
    out.push_back(u2);
    out.push_back(gates::cnot(0, 1, 2) * gates::cnot(1, 0, 2) * u2);
    out.push_back(gates::cnot(1, 0, 2) * gates::cnot(0, 1, 2) * u2);
  } else {
    throw DomainError("mub_family: unsupported dimension " + std::to_string(d) +
                      " (supported: 2, 3, 4)");
  }
  return out;
}

std::vector<double> isocoherent_amplitudes() {
  const double s5 = std::sqrt(5.0);
  const double ap = std::sqrt(10.0 + 2.0 * s5) / 5.0;
  const double am = std::sqrt(10.0 - 2.0 * s5) / 5.0;
  return {0.5 * std::sqrt(1.0 + 1.0 / s5 + ap), 0.5 * std::sqrt(1.0 - 1.0 / s5 + am),
          0.5 * std::sqrt(1.0 + 1.0 / s5 - ap), 0.5 * std::sqrt(1.0 - 1.0 / s5 - am)};
}

std::vector<Basis> isocoherent_mub() {
  const auto p = isocoherent_amplitudes();
  const double amp[4][4] = {{p[3], p[2], p[1], p[0]},
                            {p[0], p[3], p[2], p[1]},
                            {p[2], p[1], p[0], p[3]},
                            {p[1], p[0], p[3], p[2]}};
  const double s5 = std::sqrt(5.0);
  const double pp = std::acos((1.0 + s5) / 4.0);
  const double pm = std::acos((1.0 - s5) / 4.0);
  const double mp = std::acos((-1.0 + s5) / 4.0);
  const double mm = std::acos((-1.0 - s5) / 4.0);
  const double pi = std::numbers::pi;

  const double phases[5][4][4] = {
      {{0, 0, 0, 0}, {0, 0, 0, pi}, {0, 0, pi, 0}, {0, pi, pi, 0}},
      {{0, 0, 0, 0}, {-mm, -mm, -mm, pp}, {mp, mp, -pm, mp}, {-mp, pm, pm, -mp}},
      {{0, 0, 0, 0}, {mm, mm, mm, -pp}, {-mp, -mp, pm, -mp}, {mp, -pm, -pm, mp}},
      {{0, 0, 0, 0}, {-mp, -mp, -mp, pm}, {-mm, -mm, pp, -mm}, {mm, -pp, -pp, mm}},
      {{0, 0, 0, 0}, {mp, mp, mp, -pm}, {mm, mm, -pp, mm}, {-mm, pp, pp, -mm}},
  };

  std::vector<Basis> out;
  for (const auto& phi : phases) {
    ComplexMatrix b(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) b(r, c) = std::polar(amp[r][c], phi[r][c]);
    out.push_back(b);
  }
  return out;
}

WeightedStateSet states_of_bases(const std::vector<Basis>& bases) {
  if (bases.empty()) throw ValidationError("states_of_bases: no bases");
  const auto d = static_cast<std::size_t>(bases.front().rows());
  std::vector<ComplexVector> states;
  for (const auto& b : bases) {
    if (static_cast<std::size_t>(b.rows()) != d || b.cols() != b.rows())
      throw DimensionError("states_of_bases: inconsistent basis shape");
    for (Eigen::Index c = 0; c < b.cols(); ++c) states.push_back(b.col(c));
  }
  return WeightedStateSet::uniform(d, std::move(states));
}

double isocoherence_cost(const ComplexMatrix& U, const std::vector<Basis>& mub) {
  if (!is_unitary(U)) throw ValidationError("isocoherence_cost: U is not unitary");
  const auto states = states_of_bases(mub);
  if (states.dim != static_cast<std::size_t>(U.rows()))
    throw DimensionError("isocoherence_cost: dimension mismatch");

  const std::size_t d = states.dim, n = states.size();
  std::vector<std::vector<double>> sorted(n, std::vector<double>(d));
  for (std::size_t i = 0; i < n; ++i) {
    const ComplexVector v = U * states.states[i];
    for (std::size_t j = 0; j < d; ++j) sorted[i][j] = std::norm(v(j));
    std::sort(sorted[i].rbegin(), sorted[i].rend());
  }

  std::vector<double> target(d);
  std::vector<double> column(n);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < n; ++i) column[i] = sorted[i][j];
    std::sort(column.begin(), column.end());
    target[j] = n % 2 ? column[n / 2] : 0.5 * (column[n / 2 - 1] + column[n / 2]);
  }

  double cost = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) cost += std::abs(sorted[i][j] - target[j]);
  return cost;
}

std::vector<double> born_probabilities(const WeightedStateSet& design,
                                       const ComplexMatrix& rho) {
  std::vector<double> p(design.size());
  for (std::size_t i = 0; i < design.size(); ++i)
    p[i] = design.states[i].dot(rho * design.states[i]).real();
  return p;
}

ComplexMatrix state_reconstruct(const WeightedStateSet& design,
                                const std::vector<double>& probs) {
  if (probs.size() != design.size())
    throw DimensionError("state_reconstruct: " + std::to_string(probs.size()) +
                         " probabilities for " + std::to_string(design.size()) +
                         " states");
  const auto d = static_cast<double>(design.dim);
  ComplexMatrix acc = ComplexMatrix::Zero(design.dim, design.dim);
  for (std::size_t i = 0; i < design.size(); ++i)
    acc += (design.weights[i] * probs[i]) * projector(design.states[i]);
  return (d * (d + 1.0) / design.total_weight()) * acc - identity(design.dim);
}

}  // namespace qdesigns
