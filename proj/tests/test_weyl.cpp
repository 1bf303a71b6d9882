#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "jlt/group_expr.hpp"
#include "jlt/weyl.hpp"

using jlt::BasedRootDatum;

namespace {

using Matrix = std::vector<std::vector<long long>>;

// Closure of the simple reflections acting on root coordinates:
// s_i(alpha_j) = alpha_j - C_ji alpha_i with C_ji = <alpha_j, alpha_i^vee>.
std::size_t matrix_group_order(const jlt::CartanMatrix& c) {
  const std::size_t k = c.size();
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < k; ++i) {
    Matrix s(k, std::vector<long long>(k, 0));
    for (std::size_t j = 0; j < k; ++j) {
      s[j][j] = 1;
      s[i][j] -= c[j][i];
    }
    gens.push_back(s);
  }
  auto mul = [k](const Matrix& a, const Matrix& b) {
    Matrix r(k, std::vector<long long>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t t = 0; t < k; ++t)
        for (std::size_t j = 0; j < k; ++j) r[i][j] += a[i][t] * b[t][j];
    return r;
  };
  Matrix id(k, std::vector<long long>(k, 0));
  for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
  std::set<Matrix> seen{id};
  std::vector<Matrix> frontier{id};
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        Matrix p = mul(g, m);
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

unsigned long long factorial(unsigned n) { return n <= 1 ? 1 : n * factorial(n - 1); }

unsigned long long closed_form(char s, unsigned n) {
  switch (s) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (1ULL << n) * factorial(n);
    case 'D': return (1ULL << (n - 1)) * factorial(n);
    case 'G': return 12;
    case 'F': return 1152;
    default: return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
  }
}

std::vector<std::vector<std::size_t>> all_subsets(std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

// Number of positive roots sent to negative roots: the length of w.
std::size_t inversions(const BasedRootDatum& d, const jlt::WeylWord& w) {
  auto roots = jlt::positive_roots(d);
  std::set<jlt::IntVector> positive;
  for (const auto& r : roots) positive.insert(r.vector);
  std::size_t n = 0;
  for (const auto& r : roots)
    if (!positive.count(jlt::apply_word(d, w, r.vector))) ++n;
  return n;
}

}  // namespace

TEST(WeylOrder, MatchesClosedFormsAndMatrixClosure) {
  struct Case {
    char s;
    unsigned n;
  };
  for (Case c : std::vector<Case>{{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5}, {'B', 2}, {'B', 3}, {'B', 4},
                                  {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4}, {'G', 2}}) {
    auto cartan = jlt::standard_cartan(c.s, c.n);
    auto g = jlt::simply_connected_from_cartan(cartan, "g");
    const auto order = jlt::weyl_group_order(g);
    EXPECT_EQ(order, closed_form(c.s, c.n)) << c.s << c.n;
    EXPECT_EQ(order, matrix_group_order(cartan)) << c.s << c.n;
  }
  EXPECT_EQ(jlt::weyl_group_order(jlt::parse_group_expr("SO(7)")), 48u);
}

TEST(WeylOrder, ExceptionalWithinBound) {
  EXPECT_EQ(jlt::weyl_group_order(jlt::parse_group_expr("E6sc")), 51840u);
  EXPECT_EQ(jlt::weyl_group_order(jlt::parse_group_expr("F4")), 1152u);
  EXPECT_EQ(jlt::weyl_group_order(jlt::parse_group_expr("GL(3)xSp(4)")), 48u);
}

TEST(WeylOrder, RefusesAboveBound) {
  EXPECT_THROW(jlt::weyl_group_order(jlt::parse_group_expr("E7sc")), jlt::domain_error);
  EXPECT_THROW(jlt::weyl_group_order(jlt::parse_group_expr("SL(8)")), jlt::domain_error);
}

TEST(LongestElement, LengthIsNumberOfPositiveRoots) {
  for (const char* expr : {"SL(5)", "Sp(8)", "SO(8)", "G2", "F4", "E6sc", "E7sc"}) {
    auto g = jlt::parse_group_expr(expr);
    std::vector<std::size_t> all(g.semisimple_rank());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    auto w0 = jlt::longest_element(g, all);
    EXPECT_EQ(w0.letters.size(), jlt::positive_roots(g).size()) << expr;
    EXPECT_EQ(inversions(g, w0), w0.letters.size()) << expr;
  }
}

TEST(LongestElement, SendsThetaToMinusTheta) {
  auto g = jlt::parse_group_expr("Sp(8)");
  for (const auto& theta : all_subsets(4)) {
    auto w = jlt::longest_element(g, theta);
    const auto roots = jlt::positive_roots(g);
    for (auto j : theta) {
      auto img = jlt::apply_word(g, w, g.simple_roots()[j]);
      bool negative_theta_root = false;
      for (const auto& r : roots) {
        jlt::IntVector neg = r.vector;
        for (auto& x : neg) x = -x;
        if (neg == img && r.supported_on(theta)) negative_theta_root = true;
      }
      EXPECT_TRUE(negative_theta_root);
    }
  }
}

TEST(WTheta, ImageLiesInDeltaForCatalogGroups) {
  for (const char* expr : {"GL(4)", "SL(6)", "Sp(8)", "GSp(10)", "Spin(9)", "SO(8)", "GSpin(12)", "E6sc", "G2", "F4"}) {
    auto g = jlt::parse_group_expr(expr);
    for (const auto& theta : all_subsets(g.semisimple_rank())) {
      auto r = jlt::find_w_theta(g, theta);
      ASSERT_EQ(r.image.size(), theta.size());
      for (std::size_t i = 0; i < theta.size(); ++i)
        EXPECT_EQ(jlt::apply_word(g, r.word, g.simple_roots()[theta[i]]), g.simple_roots()[r.image[i]]);
      EXPECT_EQ(inversions(g, r.word), r.word.letters.size()) << expr;
    }
  }
}

TEST(WTheta, SmallExamples) {
  auto sl3 = jlt::parse_group_expr("SL(3)");
  auto r = jlt::find_w_theta(sl3, {0});
  EXPECT_EQ(r.image, std::vector<std::size_t>{1});
  auto e = jlt::find_w_theta(sl3, {});
  EXPECT_TRUE(e.image.empty());
  EXPECT_EQ(e.word.letters.size(), 3u);
  EXPECT_EQ(jlt::WeylWord{}.str(), "e");
  EXPECT_EQ((jlt::WeylWord{{0, 1}}.str()), "s1 s2");
}

TEST(ValidateSubset, RejectsBadIndices) {
  auto g = jlt::parse_group_expr("Sp(4)");
  EXPECT_THROW(jlt::longest_element(g, {2}), jlt::input_error);
  EXPECT_THROW(jlt::find_w_theta(g, {0, 0}), jlt::input_error);
}

TEST(ReducedRoots, MaximalParabolicHasOneReducedRoot) {
  auto sp4 = jlt::parse_group_expr("Sp(4)");
  auto a1 = jlt::reduced_roots(sp4, {0});
  ASSERT_EQ(a1.size(), 1u);
  EXPECT_EQ(a1[0].preimages.size(), 3u);
  auto a2 = jlt::reduced_roots(sp4, {1});
  ASSERT_EQ(a2.size(), 1u);
  EXPECT_EQ(a2[0].multiples.size(), 2u);
}

TEST(ReducedRoots, PartitionRootsOutsideTheta) {
  for (const char* expr : {"SL(5)", "Sp(6)", "SO(9)", "GSpin(8)", "G2", "F4", "E6sc"}) {
    auto g = jlt::parse_group_expr(expr);
    auto roots = jlt::positive_roots(g);
    for (const auto& theta : all_subsets(g.semisimple_rank())) {
      if (theta.size() == g.semisimple_rank()) continue;
      std::vector<int> hits(roots.size(), 0);
      const auto classes = jlt::reduced_roots(g, theta);
      for (const auto& c : classes) {
        for (auto i : c.preimages) ++hits[i];
        EXPECT_EQ(c.direction.size(), g.semisimple_rank() - theta.size());
        EXPECT_TRUE(std::all_of(c.direction.begin(), c.direction.end(), [](const jlt::Int& x) { return x >= 0; }));
        EXPECT_EQ(jlt::content(c.direction), 1);
      }
      for (std::size_t i = 0; i < roots.size(); ++i) EXPECT_EQ(hits[i], roots[i].supported_on(theta) ? 0 : 1) << expr;
      if (theta.size() + 1 == g.semisimple_rank()) EXPECT_EQ(classes.size(), 1u) << expr;
      EXPECT_GE(classes.size(), g.semisimple_rank() - theta.size()) << expr;
    }
  }
}

TEST(RankOne, LevisHaveOneMoreSimpleRoot) {
  auto sl4 = jlt::parse_group_expr("SL(4)");
  auto whole = jlt::rank_one_decomposition(sl4, {0, 2});
  ASSERT_EQ(whole.size(), 1u);
  EXPECT_EQ(whole[0].type.str(), "A3");
  for (const char* expr : {"SL(5)", "Sp(6)", "SO(8)", "E6sc"}) {
    auto g = jlt::parse_group_expr(expr);
    for (const auto& theta : all_subsets(g.semisimple_rank())) {
      if (theta.size() == g.semisimple_rank()) continue;
      for (const auto& m : jlt::rank_one_decomposition(g, theta)) {
        EXPECT_EQ(m.datum.semisimple_rank(), theta.size() + 1);
        EXPECT_EQ(m.datum.rank(), g.rank());
      }
    }
  }
}

TEST(RankOne, TypeNameDoesNotDependOnTheta) {
  for (std::size_t j : {0u, 1u}) {
    auto sp = jlt::rank_one_decomposition(jlt::parse_group_expr("Sp(4)"), {j});
    auto so = jlt::rank_one_decomposition(jlt::parse_group_expr("SO(5)"), {j});
    ASSERT_EQ(sp.size(), 1u);
    ASSERT_EQ(so.size(), 1u);
    EXPECT_EQ(sp[0].type.str(), "C2");
    EXPECT_EQ(so[0].type.str(), "B2");
  }
  auto f4 = jlt::rank_one_decomposition(jlt::parse_group_expr("F4"), {1, 2});
  std::multiset<std::string> types;
  for (const auto& m : f4) types.insert(m.type.str());
  // rank-two relative system: four reduced roots in two Weyl orbits
  EXPECT_EQ(types, (std::multiset<std::string>{"B3", "B3", "C3", "C3"}));
}
