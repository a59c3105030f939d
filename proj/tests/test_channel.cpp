#include <gtest/gtest.h>

#include <map>

#include "qdesigns/channel.hpp"
#include "qdesigns/errors.hpp"
#include "qdesigns/gates.hpp"
#include "qdesigns/unitary.hpp"
#include "support.hpp"

using namespace qdesigns;
using testing_support::Gen;

namespace {

const UnitarySet& c2() {
  static const UnitarySet s = clifford_group(2);
  return s;
}

ComplexMatrix bell(std::size_t d) {
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d * d));
  for (std::size_t a = 0; a < d; ++a) v(static_cast<Eigen::Index>(a * d + a)) = 1.0 / std::sqrt(double(d));
  return projector(v);
}

bool contains_choi(const WeightedChannelSet& s, const ComplexMatrix& sigma) {
  for (const auto& ch : s.channels)
    if (hs_norm(choi_of_channel(ch).matrix - sigma) <= 1e-8) return true;
  return false;
}

double purity(const ComplexMatrix& m) { return (m * m).trace().real(); }

}  // namespace

TEST(Choi, MatchesDefinition) {
  Gen g(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto phi = g.channel(3, 2);
    EXPECT_LT(hs_norm(choi_of_channel(phi).matrix - testing_support::choi_by_definition(phi)),
              1e-14);
  }
}

TEST(Choi, BasicChannels) {
  EXPECT_LT(hs_norm(choi_of_channel(identity_channel(2)).matrix - bell(2)), 1e-15);
  EXPECT_LT(hs_norm(choi_of_channel(depolarizing_qubit()).matrix - identity(4) / 4.0), 1e-15);
  Gen g(2);
  const auto u = choi_of_channel(unitary_channel(g.unitary(3))).matrix;
  EXPECT_NEAR(purity(u), 1.0, 1e-12);
  QuantumChannel broken = identity_channel(2);
  broken.kraus[0] *= 1.1;
  EXPECT_THROW(choi_of_channel(broken), ValidationError);
}

TEST(Choi, RoundTripThroughKraus) {
  Gen g(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto phi = g.channel(2, 3);
    const ChoiState s = choi_of_channel(phi);
    const QuantumChannel back = channel_from_choi(s);
    EXPECT_LT(back.completeness_defect(), 1e-12);
    EXPECT_LT(hs_norm(choi_of_channel(back).matrix - s.matrix), 1e-12);
    const ComplexMatrix rho = g.density(2);
    EXPECT_LT(hs_norm(back.apply(rho) - phi.apply(rho)), 1e-12);
  }
}

TEST(ChoiTcopy, MatchesIndexFormula) {
  Gen g(4);
  for (int trial = 0; trial < 10; ++trial) {
    const auto phi = g.channel(2, 2);
    const ComplexMatrix s1 = choi_of_channel(phi).matrix;
    EXPECT_LT(hs_norm(choi_tcopy(phi, 2).matrix - testing_support::two_copy_by_index(s1, 2)),
              1e-14);
  }
  EXPECT_LT(hs_norm(choi_tcopy(identity_channel(2), 1).matrix - bell(2)), 1e-15);
  EXPECT_NEAR(purity(choi_tcopy(identity_channel(2), 2).matrix), 1.0, 1e-14);
  EXPECT_LT(hs_norm(choi_tcopy(depolarizing_qubit(), 2).matrix - identity(16) / 16.0), 1e-15);
  EXPECT_NEAR(choi_tcopy(g.channel(2, 3), 3).matrix.trace().real(), 1.0, 1e-12);
  EXPECT_THROW(choi_tcopy(identity_channel(2), 4), CapacityError);
}

TEST(ChoiTcopy, TwoCopiesOfIdentityOnQuditPair) {
  // sigma_{id (x) id} on H_2 (x) H_2 equals the two-copy Choi state.
  const ComplexMatrix two = choi_tcopy(identity_channel(2), 2).matrix;
  EXPECT_LT(hs_norm(two - bell(4)), 1e-14);
}

TEST(AverageChoi, DegreeOneIsMaximallyMixed) {
  for (std::size_t d : {2u, 3u})
    for (double k : {1.0, 1.5, 2.0, 4.0, 16.0})
      EXPECT_LT(hs_norm(average_choi(d, k, 1).matrix - identity(d * d) / double(d * d)), 1e-14);
}

TEST(AverageChoi, DegreeTwoClosedForm) {
  for (double k : {1.0, 1.5, 2.0, 3.0, 4.0, 7.5})
    EXPECT_LT(hs_norm(average_choi(2, k, 2).matrix -
                      testing_support::average_choi_t2_closed_form(2, k)),
              1e-14)
        << k;
  EXPECT_LT(hs_norm(average_choi(3, 2.0, 2).matrix -
                    testing_support::average_choi_t2_closed_form(3, 2.0)),
            1e-14);
}

TEST(AverageChoi, ValidStates) {
  for (std::size_t d : {2u, 3u})
    for (double k : {1.0, 1.5, 2.0, 4.0, 16.0})
      for (int t = 1; t <= 3; ++t) {
        if (double(d) * k < t) continue;
        const ChoiState s = average_choi(d, k, t);
        EXPECT_TRUE(is_hermitian(s.matrix));
        EXPECT_NEAR(s.matrix.trace().real(), 1.0, 1e-10);
        // Non-integer k is an analytic continuation, not an average over channels.
        if (k == std::floor(k)) {
          EXPECT_GE(min_eigenvalue(s.matrix), -1e-9) << d << " " << k << " " << t;
        }
      }
}

TEST(AverageChoi, KIndependentAtDegreeOne) {
  EXPECT_EQ(hs_norm(average_choi(2, 1.0, 1).matrix - average_choi(2, 9.0, 1).matrix), 0.0);
}

TEST(AverageChoi, DomainErrors) {
  EXPECT_THROW(average_choi(2, 0.5, 1), DomainError);
  EXPECT_THROW(average_choi(1, 2.0, 3), DomainError);
}

TEST(AverageChoi, CliffordPushforwardEqualsHaarAverage) {
  // Oracle independent of the Weingarten route: C2 is a unitary 3-design on
  // dk = 4, so the mean over its induced channels equals the Haar average.
  const ChannelPushforward pf = stinespring_pushforward(c2(), 2, 2);
  for (int t = 1; t <= 3; ++t) EXPECT_LE(design_distance(pf.channels, 2, 2.0, t), 1e-10);
}

TEST(Unistochastic, AverageMatchesCliffordPushforward) {
  const ChannelPushforward pf = unistochastic_pushforward(c2(), 2);
  for (int t = 1; t <= 3; ++t) {
    const ComplexMatrix mean = weighted_average_choi(pf.channels, t);
    EXPECT_LT(hs_norm(mean - average_choi_unistochastic(2, t).matrix), 1e-10) << t;
  }
  EXPECT_LT(hs_norm(average_choi_unistochastic(2, 1).matrix - identity(4) / 4.0), 1e-14);
}

TEST(Unistochastic, DiffersFromStinespringAverage) {
  EXPECT_GT(hs_norm(average_choi_unistochastic(2, 2).matrix - average_choi(2, 2.0, 2).matrix),
            1e-3);
}

TEST(Unistochastic, ValidStates) {
  for (int t = 1; t <= 3; ++t) {
    const ChoiState s = average_choi_unistochastic(2, t);
    EXPECT_NEAR(s.matrix.trace().real(), 1.0, 1e-12);
    EXPECT_GE(min_eigenvalue(s.matrix), -1e-9);
  }
}

TEST(Stinespring, SpecialUnitaries) {
  Gen g(5);
  const ComplexMatrix v = g.unitary(2);
  const QuantumChannel ch = channel_from_stinespring(kron(v, identity(2)), 2, 2);
  EXPECT_LT(hs_norm(choi_of_channel(ch).matrix - choi_of_channel(unitary_channel(v)).matrix),
            1e-14);
  const QuantumChannel sw = channel_from_stinespring(gates::swap2(), 2, 2);
  EXPECT_LT(hs_norm(choi_of_channel(sw).matrix - choi_of_channel(emission_qubit()).matrix) +
                hs_norm(sw.apply(g.density(2)) - projector(ComplexVector::Unit(2, 0))),
            1e-14);
  for (int trial = 0; trial < 20; ++trial)
    EXPECT_LT(channel_from_stinespring(g.unitary(6), 2, 3).completeness_defect(), 1e-12);
  EXPECT_THROW(channel_from_stinespring(g.matrix(4, 4), 2, 2), ValidationError);
}

TEST(Stinespring, MatchesPartialTraceDefinition) {
  Gen g(6);
  const std::array<std::size_t, 1> keep{0};
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix u = g.unitary(6);
    const ComplexMatrix rho = g.density(2);
    const ComplexMatrix full =
        u * kron(rho, projector(ComplexVector::Unit(3, 0))) * u.adjoint();
    const ComplexMatrix expect = partial_trace(full, SubsystemShape({2, 3}), keep);
    EXPECT_LT(hs_norm(channel_from_stinespring(u, 2, 3).apply(rho) - expect), 1e-13);
  }
}

TEST(UnistochasticChannel, Definition) {
  Gen g(7);
  const std::array<std::size_t, 1> keep{0};
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix u = g.unitary(4);
    const QuantumChannel xi = unistochastic_channel(u, 2);
    EXPECT_EQ(xi.kraus.size(), 4u);
    EXPECT_LT(xi.completeness_defect(), 1e-12);
    const ComplexMatrix rho = g.density(2);
    const ComplexMatrix expect =
        partial_trace(u * kron(rho, identity(2) / 2.0) * u.adjoint(), SubsystemShape({2, 2}), keep);
    EXPECT_LT(hs_norm(xi.apply(rho) - expect), 1e-13);
    EXPECT_LT(hs_norm(xi.apply(identity(2) / 2.0) - identity(2) / 2.0), 1e-12);
  }
  const QuantumChannel sw = unistochastic_channel(gates::swap2(), 2);
  EXPECT_LT(hs_norm(choi_of_channel(sw).matrix - identity(4) / 4.0), 1e-14);
  const ComplexMatrix v = g.unitary(2);
  EXPECT_LT(hs_norm(choi_of_channel(unistochastic_channel(kron(v, identity(2)), 2)).matrix -
                    choi_of_channel(unitary_channel(v)).matrix),
            1e-13);
}

TEST(Pushforward, CliffordMultiplicities) {
  const ChannelPushforward pf = stinespring_pushforward(c2(), 2, 2);
  std::map<std::size_t, std::size_t> hist;
  std::size_t total = 0;
  for (auto m : pf.multiplicities) {
    ++hist[m];
    total += m;
  }
  EXPECT_EQ(pf.channels.size(), 48u);
  EXPECT_EQ(hist, (std::map<std::size_t, std::size_t>{{96, 24}, {384, 24}}));
  EXPECT_EQ(total, 11520u);
}

TEST(Pushforward, UnitaryPartIsCliffordOne) {
  const WeightedChannelSet s = clifford_induced_channels();
  ASSERT_EQ(s.size(), 48u);
  const UnitarySet c1 = clifford_group(1);
  std::size_t unitary = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const ComplexMatrix sig = choi_of_channel(s.channels[i]).matrix;
    if (std::abs(purity(sig) - 1.0) < 1e-10) {
      ++unitary;
      EXPECT_EQ(s.weights[i], 1.0);
    } else {
      EXPECT_EQ(s.weights[i], 4.0);
    }
  }
  EXPECT_EQ(unitary, 24u);
  for (const auto& u : c1.elements)
    EXPECT_TRUE(contains_choi(s, choi_of_channel(unitary_channel(u)).matrix));
  std::size_t contractions = 0;
  for (const auto& tag : s.tags) contractions += tag == "contraction";
  EXPECT_EQ(contractions, 6u);
}

TEST(R2Channels, StructureAndEquality) {
  const WeightedChannelSet r2 = r2_channels();
  ASSERT_EQ(r2.size(), 24u);
  const WeightedChannelSet induced = clifford_induced_channels();
  std::size_t contractions = 0;
  for (std::size_t i = 0; i < r2.size(); ++i) {
    const ComplexMatrix sig = choi_of_channel(r2.channels[i]).matrix;
    const RealVector ev = hermitian_eigenvalues(sig);
    std::vector<double> e(ev.data(), ev.data() + ev.size());
    std::sort(e.begin(), e.end());
    EXPECT_NEAR(e[0], 0.0, 1e-10);
    EXPECT_NEAR(e[1], 0.0, 1e-10);
    EXPECT_NEAR(e[2], 0.5, 1e-10);
    EXPECT_NEAR(e[3], 0.5, 1e-10);
    EXPECT_TRUE(contains_choi(induced, sig));
    if (r2.tags[i] == "contraction") {
      ++contractions;
      const ComplexMatrix out = r2.channels[i].apply(identity(2) / 2.0);
      EXPECT_NEAR(purity(out), 1.0, 1e-12);
      // Bloch vector on an octahedron vertex: exactly one nonzero component.
      const double x = 2.0 * out(0, 1).real(), y = 2.0 * out(1, 0).imag(),
                   z = (out(0, 0) - out(1, 1)).real();
      EXPECT_NEAR(std::abs(x) + std::abs(y) + std::abs(z), 1.0, 1e-12);
    } else {
      EXPECT_EQ(r2.tags[i], "mixed-unitary");
      EXPECT_LT(hs_norm(r2.channels[i].apply(identity(2) / 2.0) - identity(2) / 2.0), 1e-12);
    }
  }
  EXPECT_EQ(contractions, 6u);
}

TEST(QubitDesign, WeightsAndDistance) {
  for (double k : {1.0, 1.5, 2.0, 3.0, 4.0, 7.5, 16.0}) {
    const WeightedChannelSet s = qubit_channel_design(k);
    ASSERT_EQ(s.size(), 49u);
    EXPECT_EQ(s.weights[0], 1.0);
    EXPECT_DOUBLE_EQ(s.weights[24], 4.0 * (k - 1.0));
    EXPECT_DOUBLE_EQ(s.weights[48], 32.0 * (k * k - 3.0 * k + 2.0));
    EXPECT_LE(design_distance(s, 2, k, 2), 1e-10) << k;
    EXPECT_EQ(s.has_signed_weights(), k > 1.0 && k < 2.0);
  }
  const WeightedChannelSet k4 = qubit_channel_design(4.0);
  EXPECT_EQ(k4.weights[30], 12.0);
  EXPECT_EQ(k4.weights[48], 192.0);
  for (double k : {2.0, 4.0}) EXPECT_LE(design_distance(qubit_channel_design(k), 2, k, 3), 1e-10);
  // The weighted family also matches at t = 3 away from powers of two.
  for (double k : {1.5, 3.0, 7.5, 16.0})
    EXPECT_LE(design_distance(qubit_channel_design(k), 2, k, 3), 1e-10) << k;
  EXPECT_LT(min_eigenvalue(average_choi(2, 1.5, 3).matrix), -1e-4);
  EXPECT_THROW(qubit_channel_design(0.5), DomainError);
}

TEST(QubitDesign, KTwoReducesToFortyEight) {
  const WeightedChannelSet s = drop_zero_weights(qubit_channel_design(2.0));
  EXPECT_EQ(s.size(), 48u);
  EXPECT_EQ(s.tags.size(), 48u);
  for (int t = 1; t <= 3; ++t) EXPECT_LE(design_distance(s, 2, 2.0, t), 1e-10);
}

TEST(QubitDesign, UnitariesAloneAreOnlyAOneDesign) {
  const WeightedChannelSet c1 = clifford1_channels();
  for (double k : {1.0, 2.0, 5.0}) EXPECT_LE(design_distance(c1, 2, k, 1), 1e-10);
  EXPECT_GT(design_distance(c1, 2, 2.0, 2), 1e-3);
}

TEST(UnistochasticDesign, FortyThreeChannels) {
  const WeightedChannelSet s = unistochastic_design_qubit();
  ASSERT_EQ(s.size(), 43u);
  std::map<double, std::size_t> hist;
  for (double w : s.weights) ++hist[w];
  EXPECT_EQ(hist, (std::map<double, std::size_t>{{1.0, 24}, {12.0, 18}, {240.0, 1}}));
  for (int t = 1; t <= 3; ++t) EXPECT_LE(unistochastic_design_distance(s, 2, t), 1e-10);
}

TEST(Classification, Kinds) {
  Gen g(8);
  EXPECT_EQ(classify_qubit_channel(unitary_channel(g.unitary(2))), "unitary");
  EXPECT_EQ(classify_qubit_channel(depolarizing_qubit()), "depolarizing");
  EXPECT_EQ(classify_qubit_channel(emission_qubit()), "contraction");
  EXPECT_EQ(classify_qubit_channel(unistochastic_channel(g.unitary(4), 2)), "mixed-unitary");
  EXPECT_EQ(classify_qubit_channel(g.channel(2, 2)), "other");
}

TEST(ChannelSet, Validation) {
  WeightedChannelSet s = clifford1_channels();
  s.weights.assign(s.size(), 0.0);
  EXPECT_THROW(s.validate(), ValidationError);
  EXPECT_THROW(design_distance(s, 2, 2.0, 1), std::invalid_argument);
}
