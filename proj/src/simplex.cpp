#include "qdesigns/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qdesigns/errors.hpp"

namespace qdesigns {

namespace {

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

void extend_indices(std::size_t pos, int remaining, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (pos + 1 == cur.size()) {
    for (int last = 0; last <= remaining; ++last) {
      cur[pos] = last;
      out.push_back(cur);
    }
    cur[pos] = 0;
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[pos] = e;
    extend_indices(pos + 1, remaining - e, cur, out);
  }
  cur[pos] = 0;
}

double max_edge(const std::vector<RealVector>& v) {
  double m = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) m = std::max(m, (v[i] - v[0]).norm());
  return m;
}

}  // namespace

double SimplexDesign::total_weight() const {
  double w = 0.0;
  for (double x : weights) w += x;
  return w;
}

void SimplexDesign::validate(double tol) const {
  if (points.size() != weights.size())
    throw ValidationError("SimplexDesign: points/weights length mismatch");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (static_cast<std::size_t>(points[i].size()) != d)
      throw DimensionError("SimplexDesign: point " + std::to_string(i) +
                           " has wrong length");
    if (points[i].minCoeff() < -tol || std::abs(points[i].sum() - 1.0) > tol)
      throw ValidationError("SimplexDesign: point " + std::to_string(i) +
                            " is not a probability vector");
    if (!(weights[i] > 0.0))
      throw ValidationError("SimplexDesign: weight " + std::to_string(i) +
                            " is not positive");
  }
}

SimplexDesign merge_points(const SimplexDesign& s, double tol) {
  SimplexDesign out;
  out.d = s.d;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool merged = false;
    for (std::size_t j = 0; j < out.points.size(); ++j) {
      if ((out.points[j] - s.points[i]).cwiseAbs().maxCoeff() <= tol) {
        out.weights[j] += s.weights[i];
        merged = true;
        break;
      }
    }
    if (!merged) {
      out.points.push_back(s.points[i]);
      out.weights.push_back(s.weights[i]);
    }
  }
  return out;
}

SimplexDesign decohere(const WeightedStateSet& s, const ComplexMatrix& basis) {
  if (static_cast<std::size_t>(basis.rows()) != s.dim || basis.cols() != basis.rows())
    throw DimensionError("decohere: basis dimension does not match state set");
  if (!is_unitary(basis)) throw ValidationError("decohere: basis is not unitary");
  SimplexDesign raw;
  raw.d = s.dim;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const ComplexVector amp = basis.adjoint() * s.states[i];
    raw.points.push_back(amp.cwiseAbs2());
    raw.weights.push_back(s.weights[i]);
  }
  return merge_points(raw);
}

double flat_simplex_moment(std::size_t d, const std::vector<int>& exponents) {
  if (exponents.size() != d)
    throw DimensionError("flat_simplex_moment: exponent count must equal d");
  int total = 0;
  double num = factorial(static_cast<int>(d) - 1);
  for (int a : exponents) {
    if (a < 0) throw DomainError("flat_simplex_moment: negative exponent");
    num *= factorial(a);
    total += a;
  }
  return num / factorial(static_cast<int>(d) - 1 + total);
}

std::vector<std::vector<int>> multi_indices(std::size_t d, int max_degree) {
  std::vector<std::vector<int>> all;
  if (d == 0) return all;
  std::vector<int> cur(d, 0);
  extend_indices(0, max_degree, cur, all);
  std::vector<std::vector<int>> out;
  for (auto& a : all) {
    int s = 0;
    for (int x : a) s += x;
    if (s >= 1) out.push_back(std::move(a));
  }
  return out;
}

DesignCheck is_simplex_design(const SimplexDesign& s, int t, double tol) {
  if (s.points.empty()) throw ValidationError("is_simplex_design: empty design");
  const double w = s.total_weight();
  DesignCheck r;
  for (const auto& a : multi_indices(s.d, t)) {
    double avg = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      double mono = 1.0;
      for (std::size_t k = 0; k < s.d; ++k)
        mono *= ipow(s.points[i](static_cast<Eigen::Index>(k)), a[k]);
      avg += s.weights[i] * mono;
    }
    r.residual = std::max(r.residual, std::abs(avg / w - flat_simplex_moment(s.d, a)));
  }
  r.passed = r.residual <= tol;
  return r;
}

SimplexDesign generalized_simpson(std::size_t d) {
  if (d < 2) throw DomainError("generalized_simpson: d must be >= 2");
  SimplexDesign s;
  s.d = d;
  const auto n = static_cast<Eigen::Index>(d);
  for (Eigen::Index i = 0; i < n; ++i) {
    s.points.push_back(RealVector::Unit(n, i));
    s.weights.push_back(1.0);
  }
  s.points.push_back(RealVector::Constant(n, 1.0 / static_cast<double>(d)));
  s.weights.push_back(static_cast<double>(d * d));
  return s;
}

double simplex_measure(const std::vector<RealVector>& vertices) {
  if (vertices.size() < 2) throw DimensionError("simplex_measure: need >= 2 vertices");
  const Eigen::Index m = vertices.front().size();
  const auto k = static_cast<Eigen::Index>(vertices.size() - 1);
  Eigen::MatrixXd e(m, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    if (vertices[static_cast<std::size_t>(j + 1)].size() != m)
      throw DimensionError("simplex_measure: vertex dimension mismatch");
    e.col(j) = vertices[static_cast<std::size_t>(j + 1)] - vertices[0];
  }
  const double det = (e.transpose() * e).determinant();
  return std::sqrt(std::max(det, 0.0)) / factorial(static_cast<int>(k));
}

WeightedPoints affine_transport(const SimplexDesign& s,
                                const std::vector<RealVector>& vertices) {
  if (vertices.size() != s.d)
    throw DimensionError("affine_transport: need exactly d target vertices");
  const double scale = max_edge(vertices);
  const double measure = simplex_measure(vertices);
  if (!(measure > 1e-12 * ipow(scale, static_cast<int>(s.d) - 1)) || scale == 0.0)
    throw DomainError("affine_transport: target simplex is degenerate");
  WeightedPoints out;
  out.weights = s.weights;
  for (const auto& p : s.points) {
    RealVector x = RealVector::Zero(vertices.front().size());
    for (std::size_t i = 0; i < s.d; ++i) x += p(static_cast<Eigen::Index>(i)) * vertices[i];
    out.points.push_back(std::move(x));
  }
  return out;
}

void Triangulation::validate() const {
  if (simplices.empty()) throw ValidationError("Triangulation: empty mesh");
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    for (std::size_t v : simplices[s])
      if (v >= vertices.size())
        throw ValidationError("Triangulation: simplex " + std::to_string(s) +
                              " references missing vertex " + std::to_string(v));
    if (simplices[s].size() != simplices.front().size())
      throw ValidationError("Triangulation: simplex " + std::to_string(s) +
                            " has inconsistent vertex count");
  }
}

std::vector<RealVector> Triangulation::simplex_vertices(std::size_t index) const {
  std::vector<RealVector> v;
  for (std::size_t i : simplices.at(index)) v.push_back(vertices.at(i));
  return v;
}

std::vector<double> Triangulation::measures() const {
  validate();
  std::vector<double> m;
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    const auto v = simplex_vertices(s);
    const double scale = max_edge(v);
    const double mu = simplex_measure(v);
    if (!(mu > 1e-12 * ipow(scale, static_cast<int>(v.size()) - 1)) || scale == 0.0)
      throw ValidationError("Triangulation: simplex " + std::to_string(s) +
                            " is degenerate");
    m.push_back(mu);
  }
  return m;
}

double Polynomial::operator()(const RealVector& x) const {
  double sum = 0.0;
  for (const auto& term : terms) {
    if (term.exponents.size() != static_cast<std::size_t>(x.size()))
      throw DimensionError("Polynomial: exponent count does not match point dimension");
    double v = term.coefficient;
    for (std::size_t i = 0; i < term.exponents.size(); ++i)
      v *= ipow(x(static_cast<Eigen::Index>(i)), term.exponents[i]);
    sum += v;
  }
  return sum;
}

int Polynomial::degree() const {
  int deg = 0;
  for (const auto& term : terms) {
    int s = 0;
    for (int e : term.exponents) s += e;
    deg = std::max(deg, s);
  }
  return deg;
}

double mesh_average(const Triangulation& mesh, const ScalarFunction& f,
                    const SimplexDesign& design) {
  const auto measures = mesh.measures();
  if (design.d != mesh.simplices.front().size())
    throw DimensionError("mesh_average: design has " + std::to_string(design.d) +
                         " vertices per simplex, mesh has " +
                         std::to_string(mesh.simplices.front().size()));
  const double wtot = design.total_weight();
  double num = 0.0, den = 0.0;
  for (std::size_t s = 0; s < measures.size(); ++s) {
    const auto pts = affine_transport(design, mesh.simplex_vertices(s));
    double avg = 0.0;
    for (std::size_t i = 0; i < pts.points.size(); ++i)
      avg += pts.weights[i] * f(pts.points[i]);
    num += measures[s] * avg / wtot;
    den += measures[s];
  }
  return num / den;
}

}  // namespace qdesigns
