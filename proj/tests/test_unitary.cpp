#include <gtest/gtest.h>

#include "qdesigns/errors.hpp"
#include "qdesigns/unitary.hpp"
#include "support.hpp"

using namespace qdesigns;
using testing_support::Gen;

namespace {

const UnitarySet& c2() {
  static const UnitarySet s = clifford_group(2);
  return s;
}

// Corollary sum evaluated pair by pair, no orbit merging.
double direct_residual(const UnitarySet& s, int t) {
  const Eigen::Index d = static_cast<Eigen::Index>(s.dim);
  double sum = 0.0, w = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    w += s.weights[i];
    for (std::size_t j = 0; j < s.size(); ++j) {
      const ComplexMatrix m = s.elements[i].adjoint() * s.elements[j];
      for (Eigen::Index a = 0; a < d; ++a)
        sum += s.weights[i] * s.weights[j] * std::pow(std::norm(m(a, a)), t);
    }
  }
  return sum - double(d) * w * w / binomial(int(d) + t - 1, t);
}

bool in_group(const PhaseCanonicalIndex& idx, const ComplexMatrix& u) {
  return idx.find(u).has_value();
}

}  // namespace

TEST(Pauli, Orders) {
  EXPECT_EQ(pauli_group(1).size(), 16u);
  EXPECT_EQ(pauli_group(2).size(), 64u);
  EXPECT_EQ(canonicalize_set(pauli_group(1)).size(), 4u);
  EXPECT_EQ(canonicalize_set(pauli_group(2)).size(), 16u);
  EXPECT_EQ(canonicalize_set(pauli_group(3)).size(), 64u);
  EXPECT_THROW(pauli_group(6), CapacityError);
}

TEST(Pauli, SquaresToPlusMinusIdentity) {
  for (const auto& p : pauli_group(2).elements) {
    const ComplexMatrix sq = p * p;
    EXPECT_TRUE(hs_norm(sq - identity(4)) < 1e-14 || hs_norm(sq + identity(4)) < 1e-14);
  }
}

TEST(Pauli, CanonicalWeightsCountPhases) {
  const UnitarySet c = canonicalize_set(pauli_group(2));
  for (double w : c.weights) EXPECT_EQ(w, 4.0);
}

TEST(Clifford, Orders) {
  EXPECT_EQ(clifford_group(1).size(), 24u);
  EXPECT_EQ(c2().size(), 11520u);
  EXPECT_THROW(clifford_group(3), CapacityError);
}

TEST(Clifford, NormalizesPauliGroup) {
  for (std::size_t n : {1u, 2u}) {
    const UnitarySet paulis = pauli_group(n);
    PhaseCanonicalIndex idx;
    for (std::size_t i = 0; i < paulis.size(); ++i) idx.insert(paulis.elements[i], i);
    const UnitarySet& cl = n == 1 ? clifford_group(1) : c2();
    for (const auto& c : cl.elements)
      for (const auto& p : paulis.elements) ASSERT_TRUE(in_group(idx, c * p * c.adjoint()));
  }
}

TEST(Clifford, ClosureUnderRandomProducts) {
  PhaseCanonicalIndex idx;
  for (std::size_t i = 0; i < c2().size(); ++i) idx.insert(c2().elements[i], i);
  EXPECT_EQ(idx.size(), 11520u);
  Gen g(1);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& a = c2().elements[static_cast<std::size_t>(g.integer(0, 11519))];
    const auto& b = c2().elements[static_cast<std::size_t>(g.integer(0, 11519))];
    ASSERT_TRUE(in_group(idx, a * b));
    ASSERT_TRUE(in_group(idx, a.adjoint()));
  }
  EXPECT_FALSE(in_group(idx, g.unitary(4)));
}

TEST(Clifford, ElementsDistinctAndUnitary) {
  c2().validate();
  PhaseCanonicalIndex idx;
  for (std::size_t i = 0; i < c2().size(); ++i) EXPECT_TRUE(idx.insert(c2().elements[i], i));
}

TEST(CanonicalPhase, IdempotentAndPhaseInvariant) {
  Gen g(2);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix u = g.unitary(3);
    const ComplexMatrix c = canonical_phase(u);
    EXPECT_EQ(canonical_phase(c), c);
    const ComplexMatrix rotated = std::polar(1.0, g.uniform(0, 6.3)) * u;
    EXPECT_LT(hs_norm(canonical_phase(rotated) - c), 1e-13);
    EXPECT_GT(c(0, 0).real(), 0.0);
    EXPECT_EQ(c(0, 0).imag(), 0.0);
  }
  for (const auto& e : c2().elements) EXPECT_EQ(canonical_phase(canonical_phase(e)), canonical_phase(e));
}

TEST(UnitaryDesign, IdentityIsNotAOneDesign) {
  UnitarySet s{2, {identity(2)}, {1.0}};
  EXPECT_NEAR(unitary_design_residual(s, 1), 1.0, 1e-15);
  EXPECT_NEAR(unitary_design_bound(s, 1), 1.0, 1e-15);
  EXPECT_FALSE(is_unitary_design(s, 1).passed);
}

TEST(UnitaryDesign, CliffordOneIsExactlyThree) {
  const UnitarySet c1 = clifford_group(1);
  for (int t = 1; t <= 3; ++t) {
    const auto c = is_unitary_design(c1, t);
    EXPECT_TRUE(c.passed) << t;
    EXPECT_LE(std::abs(c.residual), 1e-10 * c.bound);
  }
  const double r4 = unitary_design_residual(c1, 4);
  EXPECT_GT(r4, 0.0);
  EXPECT_NEAR(r4, direct_residual(c1, 4), 1e-9);
}

TEST(UnitaryDesign, PauliIsOneDesignOnly) {
  const UnitarySet p = pauli_group(2);
  EXPECT_TRUE(is_unitary_design(p, 1).passed);
  EXPECT_FALSE(is_unitary_design(p, 2).passed);
  EXPECT_NEAR(unitary_design_residual(p, 2), direct_residual(p, 2), 1e-8);
}

TEST(UnitaryDesign, CliffordTwoIsThreeDesign) {
  const auto c = is_unitary_design(c2(), 3);
  EXPECT_TRUE(c.passed);
  EXPECT_LE(c.residual, 1e-9 * c.bound);
  EXPECT_FALSE(is_unitary_design(c2(), 4).passed);
}

TEST(UnitaryDesign, MergedOrbitSumMatchesPairSumOnRandomSets) {
  Gen g(3);
  for (int trial = 0; trial < 20; ++trial) {
    UnitarySet s;
    s.dim = 3;
    for (int i = 0; i < 6; ++i) {
      s.elements.push_back(g.unitary(3));
      s.weights.push_back(g.uniform(0.5, 2.0));
    }
    for (int t = 1; t <= 3; ++t) {
      const double r = unitary_design_residual(s, t);
      EXPECT_NEAR(r, direct_residual(s, t), 1e-11 * (1.0 + std::abs(r)));
      EXPECT_GE(r, -1e-9);
    }
  }
}

TEST(UnitaryDesign, ResidualMatchesPairSumOnCliffordSubset) {
  UnitarySet s;
  s.dim = 4;
  for (std::size_t i = 0; i < c2().size(); i += 97) {
    s.elements.push_back(c2().elements[i]);
    s.weights.push_back(1.0);
  }
  for (int t = 1; t <= 3; ++t)
    EXPECT_NEAR(unitary_design_residual(s, t), direct_residual(s, t), 1e-8);
}

TEST(Orbit, OctahedronFromCliffordOne) {
  ComplexVector zero = ComplexVector::Zero(2);
  zero(0) = 1.0;
  const auto oct = orbit_state(clifford_group(1), zero);
  ASSERT_EQ(oct.size(), 6u);
  for (double w : oct.weights) EXPECT_EQ(w, 4.0);
  EXPECT_TRUE(is_projective_design(oct, 3).passed);
  EXPECT_FALSE(is_projective_design(oct, 4).passed);
}

TEST(Orbit, IdentityOnlySet) {
  Gen g(4);
  const ComplexVector psi = g.state(3);
  const auto o = orbit_state(UnitarySet{3, {identity(3)}, {1.0}}, psi);
  ASSERT_EQ(o.size(), 1u);
  EXPECT_EQ(o.weights[0], 1.0);
  EXPECT_LT((o.states[0] - psi).norm(), 1e-15);
  EXPECT_THROW(orbit_state(clifford_group(1), g.state(3)), DimensionError);
}

TEST(Orbit, CliffordTwoOrbitIsThreeDesign) {
  ComplexVector zero = ComplexVector::Zero(4);
  zero(0) = 1.0;
  const auto o = orbit_state(c2(), zero);
  EXPECT_EQ(o.size(), 60u);
  EXPECT_TRUE(is_projective_design(o, 3).passed);
}
