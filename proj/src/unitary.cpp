#include "qdesigns/unitary.hpp"

#include <cmath>
#include <deque>
#include <string>

#include "qdesigns/errors.hpp"
#include "qdesigns/gates.hpp"

namespace qdesigns {

double UnitarySet::total_weight() const {
  double w = 0.0;
  for (double x : weights) w += x;
  return w;
}

void UnitarySet::validate(double tol) const {
  if (elements.size() != weights.size())
    throw ValidationError("UnitarySet: elements/weights length mismatch");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (static_cast<std::size_t>(elements[i].rows()) != dim)
      throw DimensionError("UnitarySet: element " + std::to_string(i) +
                           " has wrong dimension");
    if (!is_unitary(elements[i], tol))
      throw ValidationError("UnitarySet: element " + std::to_string(i) +
                            " is not unitary");
    if (!(weights[i] > 0.0))
      throw ValidationError("UnitarySet: weight " + std::to_string(i) +
                            " is not positive");
  }
}

ComplexMatrix canonical_phase(const ComplexMatrix& u) {
  for (Eigen::Index r = 0; r < u.rows(); ++r) {
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
      const Complex x = u(r, c);
      const double mag = std::abs(x);
      if (mag <= 1e-8) continue;
      if (x.imag() == 0.0 && x.real() > 0.0) return u;
      ComplexMatrix out = u * (std::conj(x) / mag);
      out(r, c) = Complex(mag, 0.0);
      return out;
    }
  }
  return u;
}

std::size_t PhaseCanonicalIndex::KeyHash::operator()(
    const std::vector<long long>& k) const {
  std::size_t h = 1469598103934665603ull;
  for (long long v : k) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<long long> PhaseCanonicalIndex::key(const ComplexMatrix& u) {
  const ComplexMatrix c = canonical_phase(u);
  std::vector<long long> k;
  k.reserve(static_cast<std::size_t>(2 * c.size()));
  for (Eigen::Index r = 0; r < c.rows(); ++r)
    for (Eigen::Index col = 0; col < c.cols(); ++col) {
      k.push_back(std::llround(c(r, col).real() * 1e12));
      k.push_back(std::llround(c(r, col).imag() * 1e12));
    }
  return k;
}

std::optional<std::size_t> PhaseCanonicalIndex::find(const ComplexMatrix& u) const {
  auto it = map_.find(key(u));
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

bool PhaseCanonicalIndex::insert(const ComplexMatrix& u, std::size_t index) {
  return map_.emplace(key(u), index).second;
}

UnitarySet pauli_group(std::size_t n) {
  if (n == 0) throw DomainError("pauli_group: n must be >= 1");
  if (n > kMaxPauliQubits)
    throw CapacityError("pauli_group: n = " + std::to_string(n) +
                        " exceeds the supported maximum of " +
                        std::to_string(kMaxPauliQubits));
  const ComplexMatrix x = gates::pauli_x(), z = gates::pauli_z();
  const ComplexMatrix single[4] = {identity(2), z, x, x * z};  // X^j Z^k, index 2j+k

  const std::size_t patterns = std::size_t{1} << (2 * n);
  std::vector<ComplexMatrix> base;
  base.reserve(patterns);
  for (std::size_t code = 0; code < patterns; ++code) {
    ComplexMatrix p = ComplexMatrix::Identity(1, 1);
    for (std::size_t q = 0; q < n; ++q)
      p = kron(p, single[(code >> (2 * (n - 1 - q))) & 3]);
    base.push_back(std::move(p));
  }

  UnitarySet out;
  out.dim = std::size_t{1} << n;
  const Complex phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const Complex& ph : phases)
    for (const auto& p : base) out.elements.push_back(ph * p);
  out.weights.assign(out.elements.size(), 1.0);
  return out;
}

UnitarySet canonicalize_set(const UnitarySet& s) {
  UnitarySet out;
  out.dim = s.dim;
  PhaseCanonicalIndex index;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (auto hit = index.find(s.elements[i])) {
      out.weights[*hit] += s.weights[i];
      continue;
    }
    index.insert(s.elements[i], out.elements.size());
    out.elements.push_back(canonical_phase(s.elements[i]));
    out.weights.push_back(s.weights[i]);
  }
  return out;
}

UnitarySet clifford_group(std::size_t n) {
  if (n == 0) throw DomainError("clifford_group: n must be >= 1");
  if (n > 2)
    throw CapacityError("clifford_group: enumeration supports n <= 2, got " +
                        std::to_string(n));
  std::vector<ComplexMatrix> gens;
  for (std::size_t q = 0; q < n; ++q) {
    gens.push_back(gates::on_qubit(gates::hadamard(), q, n));
    gens.push_back(gates::on_qubit(gates::phase(), q, n));
  }
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t t = 0; t < n; ++t)
      if (c != t) gens.push_back(gates::cnot(c, t, n));

  UnitarySet out;
  out.dim = std::size_t{1} << n;
  PhaseCanonicalIndex index;
  out.elements.push_back(identity(out.dim));
  index.insert(out.elements.back(), 0);
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (const auto& g : gens) {
      ComplexMatrix next = canonical_phase(g * out.elements[head]);
      if (index.insert(next, out.elements.size()))
        out.elements.push_back(std::move(next));
    }
  }
  out.weights.assign(out.elements.size(), 1.0);
  return out;
}

WeightedStateSet orbit_state(const UnitarySet& s, const ComplexVector& psi) {
  if (static_cast<std::size_t>(psi.size()) != s.dim)
    throw DimensionError("orbit_state: state dimension does not match set");
  if (std::abs(psi.norm() - 1.0) > kDefaultTol)
    throw ValidationError("orbit_state: state is not normalized");
  WeightedStateSet out;
  out.dim = s.dim;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const ComplexVector v = s.elements[i] * psi;
    bool merged = false;
    for (std::size_t j = 0; j < out.states.size(); ++j) {
      if (std::norm(out.states[j].dot(v)) >= 1.0 - 1e-10) {
        out.weights[j] += s.weights[i];
        merged = true;
        break;
      }
    }
    if (!merged) {
      out.states.push_back(v);
      out.weights.push_back(s.weights[i]);
    }
  }
  return out;
}

double unitary_design_bound(const UnitarySet& s, int t) {
  const double w = s.total_weight();
  return static_cast<double>(s.dim) * w * w /
         binomial(static_cast<int>(s.dim) + t - 1, t);
}

double unitary_design_residual(const UnitarySet& s, int t) {
  if (s.elements.empty())
    throw ValidationError("unitary_design_residual: empty unitary set");
  double sum = 0.0;
  for (std::size_t a = 0; a < s.dim; ++a) {
    ComplexVector e = ComplexVector::Zero(static_cast<Eigen::Index>(s.dim));
    e(static_cast<Eigen::Index>(a)) = 1.0;
    sum += welch_sum(orbit_state(s, e), t);
  }
  return sum - unitary_design_bound(s, t);
}

DesignCheck is_unitary_design(const UnitarySet& s, int t, double tol) {
  DesignCheck r;
  r.bound = unitary_design_bound(s, t);
  r.residual = unitary_design_residual(s, t);
  r.passed = r.residual <= tol * r.bound;
  return r;
}

}  // namespace qdesigns
