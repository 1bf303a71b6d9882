#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <string>

#include "jlt/group_expr.hpp"
#include "jlt/kottwitz.hpp"

namespace {

long long euler_phi(long long n) {
  long long count = 0;
  for (long long k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

}  // namespace

TEST(KottwitzGroup, ProjectiveLinearGroupsAreCyclic) {
  for (int n = 2; n <= 8; ++n) {
    auto a = jlt::kottwitz_group(jlt::parse_group_expr("PGL(" + std::to_string(n) + ")"));
    EXPECT_EQ(a.order(), n);
    EXPECT_EQ(a.invariant_factors().size(), 1u);
    EXPECT_TRUE(jlt::kottwitz_group(jlt::parse_group_expr("SL(" + std::to_string(n) + ")")).is_trivial());
    EXPECT_TRUE(jlt::kottwitz_group(jlt::parse_group_expr("GL(" + std::to_string(n) + ")")).is_trivial());
  }
}

TEST(KottwitzGroup, RigidExceptionalGroups) {
  for (const char* expr : {"E8", "F4", "G2"}) {
    auto g = jlt::parse_group_expr(expr);
    EXPECT_TRUE(jlt::kottwitz_group(g).is_trivial()) << expr;
    EXPECT_EQ(jlt::ad_quotient_order(g), 1) << expr;
  }
}

TEST(KottwitzGroup, EqualsFundamentalGroupForSplitGroups) {
  for (const char* expr : {"SL(4)", "PGL(6)", "GL(3)", "Sp(6)", "PSp(6)", "GSp(6)", "SO(7)", "Spin(7)", "SO(8)",
                           "PSO(8)", "PSO(10)", "GSpin(9)", "E6sc", "E7sc", "E7ad", "GL(2)xPGL(3)", "SO(8)xPSp(4)"}) {
    auto g = jlt::parse_group_expr(expr);
    EXPECT_EQ(jlt::kottwitz_group(g), jlt::fundamental_group(g)) << expr;
  }
  EXPECT_EQ(jlt::kottwitz_group(jlt::parse_group_expr("PSO(8)")).str(), "Z/2 x Z/2");
  EXPECT_EQ(jlt::kottwitz_group(jlt::parse_group_expr("PSO(10)")).str(), "Z/4");
}

TEST(AdjointQuotientOrder, CountsInnerFormClasses) {
  const std::map<std::string, long long> expected = {
      {"SL(5)", 5}, {"GL(4)", 4}, {"Sp(8)", 2}, {"SO(9)", 2}, {"SO(8)", 4}, {"Spin(10)", 4},
      {"E6sc", 3},  {"E7sc", 2},  {"GL(1)", 1}, {"GL(2)xSL(3)", 6},
  };
  for (const auto& [expr, order] : expected) EXPECT_EQ(jlt::ad_quotient_order(jlt::parse_group_expr(expr)), order) << expr;
}

TEST(DualCenter, DisconnectedTorusExactlyForNonSemisimple) {
  EXPECT_TRUE(jlt::kottwitz_dual_center_is_disconnected_torus(jlt::parse_group_expr("GL(3)")));
  EXPECT_TRUE(jlt::kottwitz_dual_center_is_disconnected_torus(jlt::parse_group_expr("GSp(4)")));
  EXPECT_FALSE(jlt::kottwitz_dual_center_is_disconnected_torus(jlt::parse_group_expr("SL(3)")));
}

TEST(InnerFormClasses, DegreeCountsAreEulerPhi) {
  for (long long n = 1; n <= 60; ++n) {
    auto classes = jlt::inner_form_classes_gl(n);
    ASSERT_EQ(static_cast<long long>(classes.size()), n);
    std::map<long long, long long> per_degree;
    for (const auto& c : classes) {
      EXPECT_EQ(n % c.d, 0);
      EXPECT_EQ(std::gcd(c.j_reduced, c.d), 1);
      EXPECT_EQ(c.j_reduced * n, c.j * c.d);
      EXPECT_EQ(c.m() * c.d, n);
      ++per_degree[c.d];
    }
    for (long long d = 1; d <= n; ++d)
      if (n % d == 0) EXPECT_EQ(per_degree[d], euler_phi(d)) << n << " " << d;
  }
}

TEST(InnerFormClasses, Descriptions) {
  auto classes = jlt::inner_form_classes_gl(4);
  EXPECT_EQ(classes[0].description(), "GL_4(F)");
  EXPECT_EQ(classes[1].description(), "GL_1(D_4)");
  EXPECT_EQ(classes[2].description(), "GL_2(D_2)");
  EXPECT_THROW(jlt::inner_form_classes_gl(0), jlt::input_error);
}
