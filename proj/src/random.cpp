#include "qdesigns/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "qdesigns/errors.hpp"

namespace qdesigns {

std::uint64_t RngStream::splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed),
      stream_(stream_index),
      engine_(splitmix64(seed ^ splitmix64(stream_index + 1))) {}

double RngStream::normal() { return normal_(engine_); }
double RngStream::uniform() { return uniform_(engine_); }

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, RngStream& rng) {
  ComplexMatrix g(rows, cols);
  const double s = 1.0 / std::sqrt(2.0);
  for (Eigen::Index c = 0; c < g.cols(); ++c)
    for (Eigen::Index r = 0; r < g.rows(); ++r) {
      const double x = rng.normal();
      const double y = rng.normal();
      g(r, c) = Complex(s * x, s * y);
    }
  return g;
}

ComplexMatrix gue(std::size_t d, RngStream& rng) {
  const ComplexMatrix g = ginibre(d, d, rng);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix wishart(std::size_t d, std::size_t s, RngStream& rng) {
  const ComplexMatrix g = ginibre(d, s, rng);
  return g * g.adjoint();
}

ComplexMatrix haar_unitary(std::size_t d, RngStream& rng) {
  const ComplexMatrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return q;
}

namespace {

// H^{-1/2} for Hermitian positive H; empty result when H is near singular.
bool inverse_sqrt(const ComplexMatrix& h, ComplexMatrix& out) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (h + h.adjoint()));
  if (es.info() != Eigen::Success) return false;
  const auto& ev = es.eigenvalues();
  if (!(ev.minCoeff() > 1e-12 * std::max(1.0, ev.maxCoeff()))) return false;
  const Eigen::VectorXd inv = ev.cwiseSqrt().cwiseInverse();
  out = es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().adjoint();
  return true;
}

}  // namespace

QuantumChannel sample_kraus_channel(std::size_t d, std::size_t s, RngStream& rng) {
  if (s < 1) throw DomainError("sample_kraus_channel: s must be >= 1");
  for (int attempt = 0; attempt <= kMaxResamples; ++attempt) {
    std::vector<ComplexMatrix> gs;
    ComplexMatrix h = ComplexMatrix::Zero(d, d);
    for (std::size_t i = 0; i < s; ++i) {
      gs.push_back(ginibre(d, d, rng));
      h += gs.back().adjoint() * gs.back();
    }
    ComplexMatrix h_isqrt;
    if (!inverse_sqrt(h, h_isqrt)) continue;
    QuantumChannel ch;
    ch.dim = d;
    for (const auto& g : gs) ch.kraus.push_back(g * h_isqrt);
    return ch;
  }
  throw NumericError("sample_kraus_channel: H singular after " +
                     std::to_string(kMaxResamples) + " resamples");
}

ChoiState sample_choi_channel(std::size_t d, std::size_t s, RngStream& rng) {
  if (s < 1) throw DomainError("sample_choi_channel: s must be >= 1");
  const SubsystemShape shape({d, d});
  const std::size_t keep_in[] = {1};
  for (int attempt = 0; attempt <= kMaxResamples; ++attempt) {
    const ComplexMatrix w = wishart(d * d, s, rng);
    const ComplexMatrix h = partial_trace(w, shape, keep_in);
    ComplexMatrix h_isqrt;
    if (!inverse_sqrt(h, h_isqrt)) continue;
    const ComplexMatrix left = kron(identity(d), h_isqrt);
    ComplexMatrix sigma = left * w * left / static_cast<double>(d);
    sigma = 0.5 * (sigma + sigma.adjoint());
    return {d, 1, sigma};
  }
  throw NumericError("sample_choi_channel: H singular after " +
                     std::to_string(kMaxResamples) + " resamples");
}

QuantumChannel sample_stinespring_channel(std::size_t d, std::size_t m, RngStream& rng) {
  if (m < 1) throw DomainError("sample_stinespring_channel: M must be >= 1");
  return channel_from_stinespring(haar_unitary(d * m, rng), d, m, 0);
}

namespace {

struct Accumulator {
  std::size_t n = 0;
  Eigen::MatrixXd mean_re, mean_im, m2_re, m2_im;

  void add(const ComplexMatrix& x) {
    if (n == 0) {
      mean_re = Eigen::MatrixXd::Zero(x.rows(), x.cols());
      mean_im = mean_re;
      m2_re = mean_re;
      m2_im = mean_re;
    }
    ++n;
    const Eigen::MatrixXd dr = x.real() - mean_re;
    const Eigen::MatrixXd di = x.imag() - mean_im;
    mean_re += dr / static_cast<double>(n);
    mean_im += di / static_cast<double>(n);
    m2_re += dr.cwiseProduct(x.real() - mean_re);
    m2_im += di.cwiseProduct(x.imag() - mean_im);
  }

  void merge(const Accumulator& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double na = static_cast<double>(n), nb = static_cast<double>(o.n);
    const double nt = na + nb;
    const Eigen::MatrixXd dr = o.mean_re - mean_re;
    const Eigen::MatrixXd di = o.mean_im - mean_im;
    mean_re += dr * (nb / nt);
    mean_im += di * (nb / nt);
    m2_re += o.m2_re + dr.cwiseAbs2() * (na * nb / nt);
    m2_im += o.m2_im + di.cwiseAbs2() * (na * nb / nt);
    n += o.n;
  }
};

}  // namespace

MatrixStats monte_carlo(const std::function<ComplexMatrix(RngStream&)>& sampler,
                        std::size_t samples, std::uint64_t seed, std::size_t threads,
                        std::size_t chunk) {
  if (samples < 2) throw DomainError("monte_carlo: need at least 2 samples");
  if (chunk == 0) throw DomainError("monte_carlo: chunk must be positive");
  const std::size_t nchunks = (samples + chunk - 1) / chunk;
  std::vector<Accumulator> parts(nchunks);

  auto run_chunk = [&](std::size_t c) {
    RngStream rng(seed, c);
    const std::size_t begin = c * chunk;
    const std::size_t end = std::min(samples, begin + chunk);
    for (std::size_t j = begin; j < end; ++j) parts[c].add(sampler(rng));
  };

  threads = std::max<std::size_t>(1, std::min(threads, nchunks));
  if (threads == 1) {
    for (std::size_t c = 0; c < nchunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (std::size_t w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t c = w; c < nchunks; c += threads) run_chunk(c);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  Accumulator total;
  for (const auto& p : parts) total.merge(p);
  MatrixStats out;
  out.count = total.n;
  out.mean = total.mean_re.cast<Complex>() + Complex(0.0, 1.0) * total.mean_im.cast<Complex>();
  const double denom = static_cast<double>(total.n) * static_cast<double>(total.n - 1);
  out.se_re = (total.m2_re / denom).cwiseSqrt();
  out.se_im = (total.m2_im / denom).cwiseSqrt();
  return out;
}

namespace {

double z_component(double diff, double se, double abs_tol) {
  if (std::abs(diff) <= abs_tol) return 0.0;
  return se > 0.0 ? std::abs(diff) / se : std::numeric_limits<double>::infinity();
}

}  // namespace

double max_z_score(const MatrixStats& a, const ComplexMatrix& b, double abs_tol) {
  if (a.mean.rows() != b.rows() || a.mean.cols() != b.cols())
    throw DimensionError("max_z_score: size mismatch");
  double z = 0.0;
  for (Eigen::Index r = 0; r < b.rows(); ++r)
    for (Eigen::Index c = 0; c < b.cols(); ++c) {
      const Complex diff = a.mean(r, c) - b(r, c);
      z = std::max(z, z_component(diff.real(), a.se_re(r, c), abs_tol));
      z = std::max(z, z_component(diff.imag(), a.se_im(r, c), abs_tol));
    }
  return z;
}

double max_z_score(const MatrixStats& a, const MatrixStats& b, double abs_tol) {
  if (a.mean.rows() != b.mean.rows() || a.mean.cols() != b.mean.cols())
    throw DimensionError("max_z_score: size mismatch");
  double z = 0.0;
  for (Eigen::Index r = 0; r < a.mean.rows(); ++r)
    for (Eigen::Index c = 0; c < a.mean.cols(); ++c) {
      const Complex diff = a.mean(r, c) - b.mean(r, c);
      const double se_re = std::hypot(a.se_re(r, c), b.se_re(r, c));
      const double se_im = std::hypot(a.se_im(r, c), b.se_im(r, c));
      z = std::max(z, z_component(diff.real(), se_re, abs_tol));
      z = std::max(z, z_component(diff.imag(), se_im, abs_tol));
    }
  return z;
}

}  // namespace qdesigns
