#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "lissajous/classify.hpp"
#include "lissajous/error.hpp"
#include "lissajous/surd.hpp"

using namespace lissajous;

namespace {

std::vector<Integer> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

bool rotation_of(const std::vector<Integer>& u, const std::vector<Integer>& v) {
  if (u.size() != v.size()) return false;
  std::vector<Integer> doubled(v);
  doubled.insert(doubled.end(), v.begin(), v.end());
  return std::search(doubled.begin(), doubled.end(), u.begin(), u.end()) != doubled.end();
}

const Psl2Mat kW45(10, 3, 3, 1);
const Psl2Mat kW1116(586, -741, -741, 937);
const Psl2Mat kW2328(31162, -103259, -103259, 342161);

}  // namespace

TEST(QuadSurd, ConstructorRescales) {
  QuadSurd x(9, 38, 1525);
  EXPECT_EQ((x.D() - x.P() * x.P()) % x.Q(), 0);
  QuadSurd y(1, 3, 5);  // 3 does not divide 5 - 1
  EXPECT_EQ((y.D() - y.P() * y.P()) % y.Q(), 0);
  EXPECT_EQ(y, QuadSurd(1, 3, 5));
  EXPECT_NEAR(y.approx(), (1 + std::sqrt(5.0)) / 3, 1e-15);
  EXPECT_THROW(QuadSurd(1, 2, 9), std::invalid_argument);
  EXPECT_THROW(QuadSurd(1, 0, 5), std::invalid_argument);
}

TEST(QuadSurd, Display) {
  EXPECT_EQ(QuadSurd(3, 2, 13).to_string(), "(3+√13)/2");
  EXPECT_EQ(QuadSurd(9, 38, 1525).to_string(), "(9+5√61)/38");
  EXPECT_EQ(QuadSurd(11, 2, 117).to_string(), "(11+3√13)/2");
  EXPECT_EQ(QuadSurd(0, 1, 2).to_string(), "√2");
  EXPECT_EQ(QuadSurd(-3, -2, 13).to_string(), "(3-√13)/2");
}

TEST(Approx, Examples) {
  EXPECT_NEAR(QuadSurd(3, 2, 13).approx(), 3.302775637731995, 1e-12);
  EXPECT_NEAR(QuadSurd(0, 1, 2).approx(), 1.4142135623730951, 1e-12);
  EXPECT_NEAR(QuadSurd(9, 38, 1525).approx(), 1.2645065363035, 1e-12);
}

TEST(FixedPoints, Examples) {
  auto [a, b] = fixed_points(kW45);
  EXPECT_EQ(a, QuadSurd(3, 2, 13));
  EXPECT_EQ(b, QuadSurd(-3, -2, 13));

  auto [c, d] = fixed_points(kW1116);
  QuadSurd hi(9, 38, 1525);
  EXPECT_TRUE((c == hi && d == hi.conjugate()) || (d == hi && c == hi.conjugate()));

  auto [e, f] = fixed_points(Psl2Mat(2, 1, 1, 1));
  EXPECT_EQ(e, QuadSurd(1, 2, 5));
  EXPECT_EQ(f, QuadSurd(-1, -2, 5));
}

TEST(FixedPoints, Errors) {
  EXPECT_THROW(fixed_points(Psl2Mat(0, -1, 1, 0)), Error);
  // A unimodular matrix with c = 0 has trace 2, so it is rejected as parabolic.
  try {
    fixed_points(Psl2Mat(1, 5, 0, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHyperbolic);
  }
}

TEST(FarEndpoint, WorkedExamples) {
  EXPECT_EQ(far_endpoint(kW45), QuadSurd(3, 2, 13));
  EXPECT_EQ(far_endpoint(kW1116), QuadSurd(9, 38, 1525));
  EXPECT_EQ(far_endpoint(kW2328), QuadSurd(509, 338, 373325));
  EXPECT_EQ(far_endpoint(kW2328).to_string(), "(509+5√14933)/338");
}

TEST(CfExpand, WorkedExamples) {
  CfExpansion a = cf_expand(QuadSurd(3, 2, 13));
  EXPECT_TRUE(a.preperiod.empty());
  EXPECT_EQ(a.period, ints({3}));

  CfExpansion b = cf_expand(QuadSurd(9, 38, 1525));
  EXPECT_EQ(unroll(b, 1).front(), 1);
  EXPECT_TRUE(rotation_of(b.period, ints({3, 1, 3, 1, 1})));

  CfExpansion c = cf_expand(QuadSurd(509, 338, 373325));
  EXPECT_EQ(unroll(c, 1).front(), 3);
  EXPECT_TRUE(rotation_of(c.period, ints({3, 5, 3, 3, 3})));
}

TEST(CfExpand, NegativeAndPreperiodic) {
  CfExpansion s2 = cf_expand(QuadSurd(0, 1, 2));
  EXPECT_EQ(s2.preperiod, ints({1}));
  EXPECT_EQ(s2.period, ints({2}));
  CfExpansion neg = cf_expand(QuadSurd(-3, -2, 13));  // (3 - sqrt 13)/2 ~ -0.30
  EXPECT_EQ(unroll(neg, 1).front(), -1);
  EXPECT_NEAR(evaluate_convergent(unroll(neg, 60)), QuadSurd(-3, -2, 13).approx(), 1e-9);
}

TEST(MatchesClusterPeriod, Examples) {
  EXPECT_TRUE(matches_cluster_period({{}, ints({3})}, {2}));
  EXPECT_TRUE(matches_cluster_period({{}, ints({3, 1, 3, 1, 1})}, {1, 2, 1, 2, 1}));
  EXPECT_FALSE(matches_cluster_period({{}, ints({3})}, {1}));
  EXPECT_TRUE(matches_cluster_period({{}, ints({3, 3})}, {2}));
}

TEST(SurdProperty, ConvergentsReproduceValue) {
  for (const LissajousType& t : enumerate_p0(40)) {
    Psl2Mat w = frieze_to_matrix(ab_to_frieze(build_W(normalize(t))));
    for (const QuadSurd& x : {fixed_points(w).first, fixed_points(w).second}) {
      CfExpansion cf = cf_expand(x);
      EXPECT_NEAR(evaluate_convergent(unroll(cf, 60)), x.approx(), 1e-9) << to_string(t);
    }
  }
}

TEST(SurdProperty, RootCoefficientIdentities) {
  for (const LissajousType& t : enumerate_p0(60)) {
    Psl2Mat w = frieze_to_matrix(ab_to_frieze(build_W(normalize(t))));
    auto [r, s] = fixed_points(w);
    // Scaled to a common denominator, r + s = 2P/Q and r*s = (P^2 - D)/Q^2.
    // With c x^2 + (d - a) x - b = 0 these must equal (a - d)/c and -b/c.
    const Integer& P = r.P();
    const Integer& Q = r.Q();
    EXPECT_EQ(2 * P * w.c(), (w.a() - w.d()) * Q) << to_string(t);
    EXPECT_EQ((P * P - r.D()) * w.c(), -w.b() * Q * Q) << to_string(t);
    EXPECT_EQ(s, r.conjugate());
  }
}

TEST(SurdProperty, FamilyPeriodsAreOddAndMatchClusters) {
  for (const LissajousType& t : enumerate_p0(60)) {
    Psl2Mat w = frieze_to_matrix(ab_to_frieze(build_W(normalize(t))));
    QuadSurd x = far_endpoint(w);
    EXPECT_GE(std::abs(x.approx()), std::abs(x.conjugate().approx()));
    CfExpansion cf = cf_expand(x);
    for (const Integer& a : cf.period) ASSERT_EQ(a % 2, 1) << to_string(t);
    ASSERT_TRUE(matches_cluster_period(cf, cluster_radii(level_slope_of(t)))) << to_string(t);
  }
}
