#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qdesigns/channel.hpp"
#include "qdesigns/tensor.hpp"

namespace testing_support {

using qdesigns::Complex;
using qdesigns::ComplexMatrix;
using qdesigns::ComplexVector;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  double normal() { return normal_(eng_); }
  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }

  ComplexMatrix matrix(Eigen::Index rows, Eigen::Index cols) {
    ComplexMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
      for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = Complex(normal(), normal());
    return m;
  }

  ComplexVector state(Eigen::Index d) {
    ComplexVector v = matrix(d, 1).col(0);
    return v / v.norm();
  }

  // Modified Gram-Schmidt on a Gaussian matrix, columns rephased by a
  // uniform phase so the result does not depend on the QR sign convention.
  ComplexMatrix unitary(Eigen::Index d) {
    ComplexMatrix m = matrix(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
      for (Eigen::Index p = 0; p < c; ++p) m.col(c) -= m.col(p).dot(m.col(c)) * m.col(p);
      m.col(c) /= m.col(c).norm();
    }
    return m;
  }

  ComplexMatrix density(Eigen::Index d) {
    const ComplexMatrix g = matrix(d, d);
    ComplexMatrix rho = g * g.adjoint();
    return rho / rho.trace();
  }

  // Kraus operators from the first d columns of a random isometry on d*k.
  qdesigns::QuantumChannel channel(std::size_t d, std::size_t k) {
    const ComplexMatrix v = unitary(static_cast<Eigen::Index>(d * k));
    qdesigns::QuantumChannel ch;
    ch.dim = d;
    for (std::size_t l = 0; l < k; ++l) {
      ComplexMatrix kr(d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t a = 0; a < d; ++a) kr(i, a) = v(i * k + l, a);
      ch.kraus.push_back(kr);
    }
    return ch;
  }

 private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

// sigma = (1/d) sum_{a,b} Phi(|a><b|) (x) |a><b|, evaluated entry by entry.
inline ComplexMatrix choi_by_definition(const qdesigns::QuantumChannel& phi) {
  const Eigen::Index d = static_cast<Eigen::Index>(phi.dim);
  ComplexMatrix sigma = ComplexMatrix::Zero(d * d, d * d);
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b) {
      ComplexMatrix eab = ComplexMatrix::Zero(d, d);
      eab(a, b) = 1.0;
      const ComplexMatrix img = phi.apply(eab);
      for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) sigma(i * d + a, j * d + b) = img(i, j) / double(d);
    }
  return sigma;
}

// Two-copy Choi state written out with explicit indices:
// <i1 i2 a1 a2| S |j1 j2 b1 b2> = s1(i1 a1, j1 b1) s1(i2 a2, j2 b2).
inline ComplexMatrix two_copy_by_index(const ComplexMatrix& s1, Eigen::Index d) {
  const Eigen::Index n = d * d * d * d;
  ComplexMatrix out(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      const Eigen::Index i1 = r / (d * d * d), i2 = (r / (d * d)) % d, a1 = (r / d) % d,
                         a2 = r % d;
      const Eigen::Index j1 = c / (d * d * d), j2 = (c / (d * d)) % d, b1 = (c / d) % d,
                         b2 = c % d;
      out(r, c) = s1(i1 * d + a1, j1 * d + b1) * s1(i2 * d + a2, j2 * d + b2);
    }
  return out;
}

// Closed form of the t = 2 Haar average over channels induced by U(dk):
// [k^2 d_a(id) d_i(id) + k d_a(sw) d_i(sw) - (k^2/D) d_a(sw) d_i(id)
//  - (k/D) d_a(id) d_i(sw)] / (d^2 (D^2 - 1)), D = dk.
inline ComplexMatrix average_choi_t2_closed_form(Eigen::Index d, double k) {
  const double D = d * k;
  const Eigen::Index n = d * d * d * d;
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      const Eigen::Index i1 = r / (d * d * d), i2 = (r / (d * d)) % d, a1 = (r / d) % d,
                         a2 = r % d;
      const Eigen::Index j1 = c / (d * d * d), j2 = (c / (d * d)) % d, b1 = (c / d) % d,
                         b2 = c % d;
      const double ai = (a1 == b1 && a2 == b2), as = (a1 == b2 && a2 == b1);
      const double ii = (i1 == j1 && i2 == j2), is = (i1 == j2 && i2 == j1);
      out(r, c) = (k * k * ai * ii + k * as * is - k * k / D * as * ii - k / D * ai * is) /
                  (double(d * d) * (D * D - 1.0));
    }
  return out;
}

}  // namespace testing_support
