#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "qdesigns/errors.hpp"
#include "qdesigns/weingarten.hpp"

using namespace qdesigns;
using Rational = boost::multiprecision::cpp_rational;

namespace {

// Exact first column of G^{-1}, G(s, r) = D^{Cl(s^-1 r)}, by Gauss-Jordan
// elimination over the rationals.
std::vector<Rational> exact_weingarten(int t, long D) {
  const auto group = enumerate_symmetric_group(t);
  const std::size_t n = group.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t r = 0; r < n; ++r) {
      Rational p = 1;
      for (int c = 0; c < group[s].inverse().compose(group[r]).cycle_count(); ++c) p *= D;
      a[s][r] = p;
    }
    a[s][n] = group[s].is_identity() ? 1 : 0;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    const Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i][n];
  return out;
}

}  // namespace

TEST(SymmetricGroup, Sizes) {
  EXPECT_EQ(enumerate_symmetric_group(1).size(), 1u);
  EXPECT_EQ(enumerate_symmetric_group(3).size(), 6u);
  const auto s4 = enumerate_symmetric_group(4);
  EXPECT_EQ(s4.size(), 24u);
  EXPECT_EQ(std::set<Permutation>(s4.begin(), s4.end()).size(), 24u);
  EXPECT_TRUE(s4.front().is_identity());
  EXPECT_EQ(enumerate_symmetric_group(6).size(), 720u);
}

TEST(SymmetricGroup, CapacityAndDomain) {
  EXPECT_THROW(enumerate_symmetric_group(7), CapacityError);
  EXPECT_THROW(enumerate_symmetric_group(0), DomainError);
}

TEST(Permutation, CycleCounts) {
  EXPECT_EQ(Permutation::identity(5).cycle_count(), 5);
  EXPECT_EQ(Permutation({1, 0}).cycle_count(), 1);
  EXPECT_EQ(Permutation({1, 2, 0}).cycle_count(), 1);
  EXPECT_EQ(Permutation({1, 0, 2}).cycle_count(), 2);
  EXPECT_EQ(Permutation({1, 0, 3, 2}).cycle_type(), (std::vector<int>{2, 2}));
  EXPECT_THROW(Permutation({0, 0}), DomainError);
}

TEST(Permutation, GroupLaws) {
  for (const auto& p : enumerate_symmetric_group(4)) {
    EXPECT_TRUE(p.compose(p.inverse()).is_identity());
    EXPECT_EQ(p.inverse().cycle_type(), p.cycle_type());
    for (const auto& q : enumerate_symmetric_group(4)) {
      const Permutation pq = p.compose(q);
      for (int i = 0; i < 4; ++i) EXPECT_EQ(pq(i), p(q(i)));
      // Conjugation preserves cycle type.
      EXPECT_EQ(q.compose(p).compose(q.inverse()).cycle_type(), p.cycle_type());
    }
  }
}

TEST(Weingarten, DegreeOne) {
  for (double D : {1.0, 2.0, 3.5, 10.0})
    EXPECT_DOUBLE_EQ((*weingarten_table(1, D))(Permutation::identity(1)), 1.0 / D);
}

TEST(Weingarten, DegreeTwoClosedForm) {
  for (double D : {2.0, 3.0, 4.0, 8.0, 16.0, 7.5}) {
    const auto tab = weingarten_table(2, D);
    const double id = (*tab)(Permutation::identity(2)), sw = (*tab)(Permutation({1, 0}));
    EXPECT_NEAR(id, 1.0 / (D * D - 1.0), 1e-12 / (D * D - 1.0));
    EXPECT_NEAR(sw, -1.0 / (D * (D * D - 1.0)), 1e-12 / (D * (D * D - 1.0)));
  }
}

TEST(Weingarten, DegreeThreeAtFourMatchesExactInverse) {
  const auto exact = exact_weingarten(3, 4);
  const auto group = enumerate_symmetric_group(3);
  const auto tab = weingarten_table(3, 4.0);
  for (std::size_t i = 0; i < group.size(); ++i)
    EXPECT_NEAR((*tab)(group[i]), exact[i].convert_to<double>(), 1e-15);
  EXPECT_EQ(exact[0], Rational(7, 360));
  EXPECT_EQ(exact[1], Rational(-1, 180));  // a transposition
  EXPECT_EQ(exact[3], Rational(1, 360));   // a 3-cycle
}

TEST(Weingarten, MatchesExactRationalSolve) {
  for (int t = 1; t <= 4; ++t)
    for (long D = t; D <= 6; ++D) {
      const auto exact = exact_weingarten(t, D);
      const auto raw = weingarten_vector(t, double(D));
      const auto tab = weingarten_table(t, double(D));
      const auto group = enumerate_symmetric_group(t);
      for (std::size_t i = 0; i < group.size(); ++i) {
        const double e = exact[i].convert_to<double>();
        const double scale = std::max(1e-300, std::abs(e));
        EXPECT_NEAR(raw[i], e, 1e-10 * scale) << "t=" << t << " D=" << D;
        EXPECT_NEAR((*tab)(group[i]), e, 1e-10 * scale) << "t=" << t << " D=" << D;
      }
    }
}

TEST(Weingarten, UncollapsedSolutionIsClassFunction) {
  for (int t = 2; t <= 4; ++t) {
    const auto raw = weingarten_vector(t, t + 0.5);
    const auto group = enumerate_symmetric_group(t);
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = 0; j < group.size(); ++j)
        if (group[i].cycle_type() == group[j].cycle_type()) {
          EXPECT_NEAR(raw[i], raw[j], 1e-12 * std::abs(raw[i]) + 1e-15);
        }
  }
}

TEST(Weingarten, GramResidual) {
  for (int t = 1; t <= 4; ++t)
    for (double D : {double(t), t + 1.0, 7.5, 16.0})
      EXPECT_LE(weingarten_gram_residual(*weingarten_table(t, D)), 1e-10)
          << "t=" << t << " D=" << D;
}

TEST(Weingarten, DomainError) {
  EXPECT_THROW(weingarten_table(3, 2.5), DomainError);
  EXPECT_THROW(weingarten_table(2, 1.0), DomainError);
}

TEST(Weingarten, CacheReturnsSameTable) {
  clear_weingarten_cache();
  const auto a = weingarten_table(3, 5.25);
  const auto b = weingarten_table(3, 5.25);
  EXPECT_EQ(a.get(), b.get());
  EXPECT_EQ(weingarten_cache_size(), 1u);
  const auto c = weingarten_table(3, 5.25 + 1e-13);
  EXPECT_NE(a.get(), c.get());
}

TEST(Weingarten, ConcurrentLookups) {
  clear_weingarten_cache();
  std::vector<std::thread> workers;
  std::vector<double> results(8);
  for (int w = 0; w < 8; ++w)
    workers.emplace_back([w, &results] {
      double acc = 0.0;
      for (int i = 0; i < 200; ++i) acc += (*weingarten_table(3, 3.0 + (i % 17)))(
                                               Permutation::identity(3));
      results[static_cast<std::size_t>(w)] = acc;
    });
  for (auto& th : workers) th.join();
  for (double r : results) EXPECT_EQ(r, results.front());
}
