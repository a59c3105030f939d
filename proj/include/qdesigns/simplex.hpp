#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "qdesigns/projective.hpp"
#include "qdesigns/tensor.hpp"

namespace qdesigns {

/// Weighted points in the probability simplex with d outcomes.
struct SimplexDesign {
  std::size_t d = 0;
  std::vector<RealVector> points;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
  double total_weight() const;
  void validate(double tol = 1e-12) const;
};

inline constexpr double kPointMergeTol = 1e-9;

/// Image of a state set under p_i = |<b_i|psi>|^2 for the columns b_i of
/// `basis`; points within L-infinity distance 1e-9 are merged.
SimplexDesign decohere(const WeightedStateSet& s, const ComplexMatrix& basis);

/// Merges points within `tol` (L-infinity), summing weights; first
/// representative kept.
SimplexDesign merge_points(const SimplexDesign& s, double tol = kPointMergeTol);

/// E[prod p_i^{a_i}] under the flat measure on the simplex.
double flat_simplex_moment(std::size_t d, const std::vector<int>& exponents);

/// All exponent vectors of length d with total degree between 1 and t.
std::vector<std::vector<int>> multi_indices(std::size_t d, int max_degree);

/// Checks weighted moments of every monomial of degree <= t against the flat
/// measure; residual is the largest absolute deviation.
DesignCheck is_simplex_design(const SimplexDesign& s, int t, double tol = 1e-10);

/// Vertices with weight 1 and the barycenter with weight d^2.
SimplexDesign generalized_simpson(std::size_t d);

struct WeightedPoints {
  std::vector<RealVector> points;
  std::vector<double> weights;
};

/// Maps barycentric design points onto the simplex spanned by `vertices`
/// (d points in R^m).
WeightedPoints affine_transport(const SimplexDesign& s,
                                const std::vector<RealVector>& vertices);

/// sqrt(det(E^T E)) / (n-1)! for the edge matrix E of an n-vertex simplex.
double simplex_measure(const std::vector<RealVector>& vertices);

struct Triangulation {
  std::vector<RealVector> vertices;
  std::vector<std::vector<std::size_t>> simplices;

  /// Throws ValidationError naming the first bad simplex.
  void validate() const;
  std::vector<RealVector> simplex_vertices(std::size_t index) const;
  std::vector<double> measures() const;
};

/// Sparse polynomial sum_j c_j prod_i x_i^{e_ji}.
struct Polynomial {
  struct Term {
    std::vector<int> exponents;
    double coefficient = 0.0;
  };
  std::vector<Term> terms;

  double operator()(const RealVector& x) const;
  int degree() const;
};

using ScalarFunction = std::function<double(const RealVector&)>;

/// Measure-weighted mean over the mesh of the per-simplex design average.
double mesh_average(const Triangulation& mesh, const ScalarFunction& f,
                    const SimplexDesign& design);

}  // namespace qdesigns
