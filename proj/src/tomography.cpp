#include "qdesigns/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <tuple>

#include "qdesigns/errors.hpp"
#include "qdesigns/projective.hpp"

namespace qdesigns {

std::vector<ComplexMatrix> mub_prep_unitaries() { return mub_family(4); }

std::vector<ComplexVector> tomography_states() {
  std::vector<ComplexVector> out;
  for (const auto& u : mub_prep_unitaries())
    for (Eigen::Index o = 0; o < kTomoOutcomes; ++o) out.push_back(u.col(o));
  return out;
}

std::vector<double> TomographyDataset::delays() const {
  std::vector<double> out;
  for (const auto& r : records)
    if (std::find(out.begin(), out.end(), r.delay_us) == out.end())
      out.push_back(r.delay_us);
  return out;
}

ProbabilityTable probabilities_at_delay(const TomographyDataset& data, double delay_us) {
  std::map<std::tuple<int, int, int>, std::uint64_t> cells;
  for (const auto& r : data.records) {
    if (r.delay_us != delay_us) continue;
    const auto key = std::make_tuple(4 * r.prep_basis + r.prep_index, r.meas_basis, r.outcome);
    if (!cells.emplace(key, r.count).second) {
      std::ostringstream msg;
      msg << "delay " << delay_us << ": duplicate cell prep_basis=" << r.prep_basis
          << " prep_index=" << r.prep_index << " meas_basis=" << r.meas_basis
          << " outcome=" << r.outcome;
      throw InputError(msg.str());
    }
  }

  std::ostringstream missing;
  int n_missing = 0;
  for (int p = 0; p < kTomoStates; ++p)
    for (int j = 0; j < kTomoBases; ++j)
      for (int o = 0; o < kTomoOutcomes; ++o)
        if (!cells.count({p, j, o})) {
          if (n_missing < 20)
            missing << (n_missing ? "; " : "") << "(" << p / 4 << "," << p % 4 << ","
                    << j << "," << o << ")";
          ++n_missing;
        }
  if (n_missing > 0) {
    std::ostringstream msg;
    msg << "delay " << delay_us << ": incomplete circuit grid, " << n_missing
        << " missing cells (prep_basis,prep_index,meas_basis,outcome): "
        << missing.str() << (n_missing > 20 ? "; ..." : "");
    throw InputError(msg.str());
  }

  ProbabilityTable probs{};
  for (int p = 0; p < kTomoStates; ++p)
    for (int j = 0; j < kTomoBases; ++j) {
      std::uint64_t total = 0;
      for (int o = 0; o < kTomoOutcomes; ++o) total += cells.at({p, j, o});
      if (total == 0) {
        std::ostringstream msg;
        msg << "delay " << delay_us << ": circuit (" << p / 4 << "," << p % 4 << "," << j
            << ") has zero shots";
        throw InputError(msg.str());
      }
      if (data.shots && total != *data.shots) {
        std::ostringstream msg;
        msg << "delay " << delay_us << ": circuit (" << p / 4 << "," << p % 4 << "," << j
            << ") has " << total << " shots, expected " << *data.shots;
        throw InputError(msg.str());
      }
      for (int o = 0; o < kTomoOutcomes; ++o)
        probs[p][j][o] = static_cast<double>(cells.at({p, j, o})) / static_cast<double>(total);
    }
  return probs;
}

namespace {

void require_two_qubit(const QuantumChannel& ch, const char* what) {
  if (ch.dim != 4) throw DimensionError(std::string(what) + ": channel must act on d = 4");
}

}  // namespace

ProbabilityTable exact_probabilities(const QuantumChannel& channel) {
  require_two_qubit(channel, "exact_probabilities");
  const auto states = tomography_states();
  ProbabilityTable probs{};
  for (int p = 0; p < kTomoStates; ++p) {
    const ComplexMatrix out = channel.apply(projector(states[p]));
    for (int j = 0; j < kTomoBases; ++j)
      for (int o = 0; o < kTomoOutcomes; ++o) {
        const auto& v = states[4 * j + o];
        probs[p][j][o] = v.dot(out * v).real();
      }
  }
  return probs;
}

std::vector<ComplexMatrix> reconstruct_states(const ProbabilityTable& probs,
                                              bool psd_project) {
  const WeightedStateSet design = WeightedStateSet::uniform(4, tomography_states());
  std::vector<ComplexMatrix> out;
  std::vector<double> p(kTomoStates);
  for (int prep = 0; prep < kTomoStates; ++prep) {
    for (int j = 0; j < kTomoBases; ++j)
      for (int o = 0; o < kTomoOutcomes; ++o) p[4 * j + o] = probs[prep][j][o];
    ComplexMatrix rho = state_reconstruct(design, p);
    rho = 0.5 * (rho + rho.adjoint());
    if (psd_project) {
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho);
      const Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
      rho = es.eigenvectors() * ev.cast<Complex>().asDiagonal() *
            es.eigenvectors().adjoint();
      rho /= rho.trace().real();
    }
    out.push_back(std::move(rho));
  }
  return out;
}

std::vector<ComplexMatrix> reconstruct_states(const TomographyDataset& data,
                                              double delay_us, bool psd_project) {
  return reconstruct_states(probabilities_at_delay(data, delay_us), psd_project);
}

ChoiState reconstruct_channel(const std::vector<ComplexMatrix>& inputs,
                              const std::vector<ComplexMatrix>& outputs) {
  if (inputs.empty() || inputs.size() != outputs.size())
    throw DimensionError("reconstruct_channel: inputs and outputs must pair up");
  const auto d = static_cast<std::size_t>(inputs.front().rows());
  const auto n = static_cast<Eigen::Index>(inputs.size());
  const auto dd = static_cast<Eigen::Index>(d * d);
  ComplexMatrix a_in(n, dd), a_out(n, dd);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& in = inputs[static_cast<std::size_t>(r)];
    const auto& out = outputs[static_cast<std::size_t>(r)];
    if (static_cast<std::size_t>(in.rows()) != d || static_cast<std::size_t>(out.rows()) != d ||
        in.cols() != in.rows() || out.cols() != out.rows())
      throw DimensionError("reconstruct_channel: inconsistent state sizes");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        a_in(r, static_cast<Eigen::Index>(i * d + j)) = in(i, j);
        a_out(r, static_cast<Eigen::Index>(i * d + j)) = out(i, j);
      }
  }
  Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> cod(a_in);
  cod.setThreshold(1e-10);
  if (cod.rank() < dd)
    throw NumericError("reconstruct_channel: input states do not span the operator space (rank " +
                       std::to_string(cod.rank()) + " < " + std::to_string(dd) + ")");
  const ComplexMatrix m = cod.solve(a_out);  // row (a,b) = vec N(|a><b|)

  ComplexMatrix sigma(dd, dd);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t b = 0; b < d; ++b)
          sigma(static_cast<Eigen::Index>(i * d + a), static_cast<Eigen::Index>(j * d + b)) =
              m(static_cast<Eigen::Index>(a * d + b), static_cast<Eigen::Index>(i * d + j));
  const Complex tr = sigma.trace();
  if (std::abs(tr) < 1e-12) throw NumericError("reconstruct_channel: zero trace");
  return {d, 1, sigma / tr};
}

ChoiState reconstruct_channel(const std::vector<ComplexMatrix>& outputs) {
  std::vector<ComplexMatrix> inputs;
  for (const auto& v : tomography_states()) inputs.push_back(projector(v));
  return reconstruct_channel(inputs, outputs);
}

ChoiState pair_choi_from_twoqubit(const ChoiState& sigma4) {
  if (sigma4.dim != 4 || sigma4.copies != 1 || sigma4.matrix.rows() != 16)
    throw DimensionError("pair_choi_from_twoqubit: expects a d = 4, t = 1 Choi state");
  // (out_1 out_2)(in_1 in_2) is already the t = 2 layout.
  return {2, 2, sigma4.matrix};
}

ChoiState twoqubit_choi_from_pair(const ChoiState& sigma_pair) {
  if (sigma_pair.dim != 2 || sigma_pair.copies != 2 || sigma_pair.matrix.rows() != 16)
    throw DimensionError("twoqubit_choi_from_pair: expects a d = 2, t = 2 Choi state");
  return {4, 1, sigma_pair.matrix};
}

namespace {

struct EmissionParts {
  ComplexMatrix unitary_sum;  // sum over C1
  ComplexMatrix rank2_sum;    // sum over r2 channels
  ComplexMatrix depolarizing;
  ComplexMatrix emission;
};

const EmissionParts& emission_parts() {
  static const EmissionParts parts = [] {
    EmissionParts p;
    const WeightedChannelSet c1 = clifford1_channels();
    const WeightedChannelSet r2 = r2_channels();
    p.unitary_sum = ComplexMatrix::Zero(16, 16);
    p.rank2_sum = ComplexMatrix::Zero(16, 16);
    for (const auto& ch : c1.channels) p.unitary_sum += choi_tcopy(ch, 2).matrix;
    const ComplexMatrix em = choi_of_channel(emission_qubit()).matrix;
    bool found = false;
    for (const auto& ch : r2.channels) {
      p.rank2_sum += choi_tcopy(ch, 2).matrix;
      if ((choi_of_channel(ch).matrix - em).norm() <= 1e-10) found = true;
    }
    if (!found) throw NumericError("emission channel missing from the rank-2 set");
    p.depolarizing = choi_tcopy(depolarizing_qubit(), 2).matrix;
    p.emission = choi_tcopy(emission_qubit(), 2).matrix;
    return p;
  }();
  return parts;
}

ComplexMatrix emission_numerator(double k, double w) {
  const auto& p = emission_parts();
  return p.unitary_sum + 4.0 * (k - 1.0) * p.rank2_sum +
         32.0 * (k * k - 3.0 * k + 2.0) * p.depolarizing + w * p.emission;
}

double emission_normalizer(double k, double w) { return 32.0 * k * k - 8.0 + w; }

}  // namespace

ChoiState model_choi_uniform(double k) { return average_choi(2, k, 2); }

ChoiState model_choi_emission(double k, double w) {
  if (!(k >= 1.0)) throw DomainError("model_choi_emission: k must be >= 1");
  if (!(w >= 0.0)) throw DomainError("model_choi_emission: w must be >= 0");
  return {2, 2, emission_numerator(k, w) / emission_normalizer(k, w)};
}

std::string to_string(KStarModel m) {
  return m == KStarModel::Uniform ? "uniform" : "emission";
}

KStarModel parse_kstar_model(const std::string& s) {
  if (s == "uniform") return KStarModel::Uniform;
  if (s == "emission") return KStarModel::Emission;
  throw InputError("unknown model '" + s + "' (expected uniform or emission)");
}

double kstar_objective(const ChoiState& sigma, KStarModel model, double k, double w) {
  const ComplexMatrix m = model == KStarModel::Uniform ? model_choi_uniform(k).matrix
                                                       : model_choi_emission(k, w).matrix;
  return hs_norm(sigma.matrix - m);
}

namespace {

template <typename F>
double golden_section(F f, double lo, double hi, double tol) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  // Return the best of the probed points and the bracket ends.
  double best = 0.5 * (a + b), fbest = f(best);
  for (double x : {a, b, c, d}) {
    const double fx = f(x);
    if (fx < fbest) {
      best = x;
      fbest = fx;
    }
  }
  return best;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    g[static_cast<std::size_t>(i)] =
        lo * std::exp(std::log(hi / lo) * i / std::max(1, n - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

// Objective values this close are indistinguishable in double precision.
bool no_worse(double candidate, double incumbent) {
  return candidate <= incumbent + 64.0 * std::numeric_limits<double>::epsilon() *
                                      std::max(1.0, std::abs(incumbent));
}

void require_fit_input(const ChoiState& sigma) {
  if (sigma.dim != 2 || sigma.copies != 2 || sigma.matrix.rows() != 16)
    throw DimensionError("fit_kstar: expects a d = 2, t = 2 Choi state");
  if (!is_hermitian(sigma.matrix, 1e-8))
    throw ValidationError("fit_kstar: input Choi state is not Hermitian");
}

KStarFit fit_uniform(const ChoiState& sigma, const KStarOptions& opt) {
  auto f = [&](double k) { return kstar_objective(sigma, KStarModel::Uniform, k, 0.0); };
  const auto grid = log_grid(1.0, opt.k_max, opt.grid_points);
  std::size_t best = 0;
  double fbest = f(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double fi = f(grid[i]);
    if (fi < fbest) {
      best = i;
      fbest = fi;
    }
  }
  const double lo = grid[best == 0 ? 0 : best - 1];
  const double hi = grid[std::min(best + 1, grid.size() - 1)];
  double k = golden_section(f, lo, hi, opt.param_tol);
  double fk = f(k);
  if (no_worse(f(1.0), fk)) {
    k = 1.0;
    fk = f(1.0);
  }
  return {k, fk, 0.0, KStarModel::Uniform};
}

// Gauss-Newton with Levenberg damping on vec(sigma - model(k, w)), bounds
// enforced by projection.
void polish_emission(const ChoiState& sigma, const KStarOptions& opt, double& k,
                     double& w) {
  const auto& p = emission_parts();
  auto residual = [&](double kk, double ww) {
    return ComplexMatrix(sigma.matrix - emission_numerator(kk, ww) / emission_normalizer(kk, ww));
  };
  double lambda = 1e-3;
  ComplexMatrix r = residual(k, w);
  double cost = r.squaredNorm();
  for (int it = 0; it < 200; ++it) {
    const double z = emission_normalizer(k, w);
    const ComplexMatrix num = emission_numerator(k, w);
    const ComplexMatrix dk =
        (4.0 * p.rank2_sum + 32.0 * (2.0 * k - 3.0) * p.depolarizing) / z -
        num * (64.0 * k / (z * z));
    const ComplexMatrix dw = p.emission / z - num / (z * z);
    // Residual derivative is minus the model derivative.
    Eigen::Matrix2d jtj;
    jtj(0, 0) = dk.squaredNorm();
    jtj(1, 1) = dw.squaredNorm();
    jtj(0, 1) = jtj(1, 0) = (dk.conjugate().cwiseProduct(dw)).sum().real();
    Eigen::Vector2d jtr;
    jtr(0) = (dk.conjugate().cwiseProduct(r)).sum().real();
    jtr(1) = (dw.conjugate().cwiseProduct(r)).sum().real();

    bool improved = false;
    for (int tries = 0; tries < 30; ++tries) {
      Eigen::Matrix2d a = jtj;
      a(0, 0) *= 1.0 + lambda;
      a(1, 1) *= 1.0 + lambda;
      a(0, 0) += 1e-300;
      a(1, 1) += 1e-300;
      const Eigen::Vector2d step = a.ldlt().solve(jtr);
      const double nk = std::clamp(k + step(0), 1.0, opt.k_max);
      const double nw = std::clamp(w + step(1), 0.0, opt.w_max);
      const ComplexMatrix nr = residual(nk, nw);
      const double ncost = nr.squaredNorm();
      if (ncost < cost) {
        const bool tiny = std::abs(nk - k) <= opt.param_tol * std::max(1.0, k) &&
                          std::abs(nw - w) <= opt.param_tol * std::max(1.0, w);
        k = nk;
        w = nw;
        r = nr;
        cost = ncost;
        lambda = std::max(lambda * 0.3, 1e-12);
        improved = true;
        if (tiny) return;
        break;
      }
      lambda *= 10.0;
    }
    if (!improved) return;
  }
}

KStarFit fit_emission(const ChoiState& sigma, const KStarOptions& opt) {
  auto f = [&](double k, double w) {
    return hs_norm(sigma.matrix - emission_numerator(k, w) / emission_normalizer(k, w));
  };
  const auto kgrid = log_grid(1.0, opt.k_max, opt.grid_points);
  std::vector<double> wgrid{0.0};
  for (double x : log_grid(1e-3, opt.w_max, opt.grid_points - 1)) wgrid.push_back(x);

  std::size_t bi = 0, bj = 0;
  double fbest = f(kgrid[0], wgrid[0]);
  for (std::size_t i = 0; i < kgrid.size(); ++i)
    for (std::size_t j = 0; j < wgrid.size(); ++j) {
      const double v = f(kgrid[i], wgrid[j]);
      if (v < fbest) {
        fbest = v;
        bi = i;
        bj = j;
      }
    }

  double k = kgrid[bi], w = wgrid[bj];
  double k_lo = kgrid[bi == 0 ? 0 : bi - 1], k_hi = kgrid[std::min(bi + 1, kgrid.size() - 1)];
  double w_lo = wgrid[bj == 0 ? 0 : bj - 1], w_hi = wgrid[std::min(bj + 1, wgrid.size() - 1)];
  for (int sweep = 0; sweep < 100; ++sweep) {
    const double k_prev = k, w_prev = w;
    k = golden_section([&](double x) { return f(x, w); }, k_lo, k_hi, opt.param_tol);
    w = golden_section([&](double x) { return f(k, x); }, w_lo, w_hi, opt.param_tol);
    if (std::abs(k - k_prev) <= opt.param_tol && std::abs(w - w_prev) <= opt.param_tol) break;
    // Recentre the brackets on the current point.
    const double hk = std::max(k_hi - k_lo, 4.0 * opt.param_tol) * 0.5;
    const double hw = std::max(w_hi - w_lo, 4.0 * opt.param_tol) * 0.5;
    k_lo = std::max(1.0, k - hk);
    k_hi = std::min(opt.k_max, k + hk);
    w_lo = std::max(0.0, w - hw);
    w_hi = std::min(opt.w_max, w + hw);
  }

  double pk = k, pw = w;
  polish_emission(sigma, opt, pk, pw);
  if (f(pk, pw) < f(k, w)) {
    k = pk;
    w = pw;
  }
  if (no_worse(f(1.0, w), f(k, w))) k = 1.0;
  if (no_worse(f(k, 0.0), f(k, w))) w = 0.0;
  return {k, f(k, w), w, KStarModel::Emission};
}

}  // namespace

KStarFit fit_kstar(const ChoiState& sigma, KStarModel model, const KStarOptions& options) {
  require_fit_input(sigma);
  if (!(options.k_max > 1.0) || options.grid_points < 3 || !(options.param_tol > 0.0))
    throw DomainError("fit_kstar: invalid options");
  return model == KStarModel::Uniform ? fit_uniform(sigma, options)
                                      : fit_emission(sigma, options);
}

TomographyDataset simulate_counts(const QuantumChannel& channel, std::uint64_t shots,
                                  RngStream& rng, double delay_us) {
  require_two_qubit(channel, "simulate_counts");
  if (shots < 1) throw DomainError("simulate_counts: shots must be >= 1");
  const ProbabilityTable probs = exact_probabilities(channel);
  TomographyDataset data;
  data.shots = shots;
  for (int p = 0; p < kTomoStates; ++p)
    for (int j = 0; j < kTomoBases; ++j) {
      std::array<double, kTomoOutcomes> q{};
      double total = 0.0;
      for (int o = 0; o < kTomoOutcomes; ++o) {
        q[o] = std::max(0.0, probs[p][j][o]);
        total += q[o];
      }
      std::uint64_t remaining = shots;
      double mass = 1.0;
      for (int o = 0; o < kTomoOutcomes; ++o) {
        const double qo = q[o] / total;
        std::uint64_t c = remaining;
        if (o + 1 < kTomoOutcomes) {
          const double prob = mass > 0.0 ? std::clamp(qo / mass, 0.0, 1.0) : 0.0;
          std::binomial_distribution<std::uint64_t> bin(remaining, prob);
          c = bin(rng.engine());
        }
        data.records.push_back({delay_us, p / 4, p % 4, j, o, c});
        remaining -= c;
        mass -= qo;
      }
    }
  return data;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

constexpr const char* kCountsHeader = "delay_us,prep_basis,prep_index,meas_basis,outcome,count";

}  // namespace

TomographyDataset read_counts_csv(std::istream& in) {
  TomographyDataset data;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (!header_seen) {
      if (t != kCountsHeader)
        throw InputError("line " + std::to_string(lineno) + ": expected header '" +
                         kCountsHeader + "'");
      header_seen = true;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(t);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(trim(f));
    if (fields.size() != 6)
      throw InputError("line " + std::to_string(lineno) + ": expected 6 fields, got " +
                       std::to_string(fields.size()));
    CountsRecord r;
    try {
      std::size_t pos = 0;
      r.delay_us = std::stod(fields[0], &pos);
      if (pos != fields[0].size() || !std::isfinite(r.delay_us)) throw std::invalid_argument("");
      int* ints[] = {&r.prep_basis, &r.prep_index, &r.meas_basis, &r.outcome};
      for (int i = 0; i < 4; ++i) {
        *ints[i] = std::stoi(fields[static_cast<std::size_t>(i + 1)], &pos);
        if (pos != fields[static_cast<std::size_t>(i + 1)].size()) throw std::invalid_argument("");
      }
      if (fields[5].empty() || fields[5][0] == '-') throw std::invalid_argument("");
      r.count = std::stoull(fields[5], &pos);
      if (pos != fields[5].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw InputError("line " + std::to_string(lineno) + ": malformed numeric field");
    }
    if (r.prep_basis < 0 || r.prep_basis >= kTomoBases || r.prep_index < 0 ||
        r.prep_index >= kTomoOutcomes || r.meas_basis < 0 || r.meas_basis >= kTomoBases ||
        r.outcome < 0 || r.outcome >= kTomoOutcomes)
      throw InputError("line " + std::to_string(lineno) + ": index out of range");
    data.records.push_back(r);
  }
  if (!header_seen) throw InputError("counts file is empty");
  return data;
}

void write_counts_csv(std::ostream& out, const TomographyDataset& data) {
  out << kCountsHeader << '\n';
  const auto old = out.precision(12);
  for (const auto& r : data.records)
    out << r.delay_us << ',' << r.prep_basis << ',' << r.prep_index << ',' << r.meas_basis
        << ',' << r.outcome << ',' << r.count << '\n';
  out.precision(old);
}

std::vector<DelayFit> fit_dataset(const TomographyDataset& data, KStarModel model,
                                  const KStarOptions& options) {
  std::vector<DelayFit> out;
  for (double delay : data.delays()) {
    const ChoiState sigma4 = reconstruct_channel(reconstruct_states(data, delay));
    out.push_back({delay, fit_kstar(pair_choi_from_twoqubit(sigma4), model, options)});
  }
  return out;
}

void write_fit_csv(std::ostream& out, const std::vector<DelayFit>& fits) {
  out << "delay_us,k_star,epsilon_star,w,model\n";
  const auto old = out.precision(12);
  for (const auto& f : fits)
    out << f.delay_us << ',' << f.fit.k_star << ',' << f.fit.epsilon_star << ',' << f.fit.w
        << ',' << to_string(f.fit.model) << '\n';
  out.precision(old);
}

}  // namespace qdesigns
