#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "jlt/abelian.hpp"
#include "jlt/lattice.hpp"

using jlt::Int;
using jlt::IntMatrix;
using jlt::IntVector;

namespace {

// Determinant by cofactor expansion; only used on tiny matrices.
Int det(const std::vector<std::vector<Int>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Int s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Int>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    Int term = a[0][j] * det(minor);
    s += (j % 2 == 0) ? term : Int(-term);
  }
  return s;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Determinantal divisors: gcd of all k x k minors.
std::vector<Int> determinantal_divisors(const IntMatrix& a) {
  std::vector<Int> out;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rs);
    subsets(a.cols(), k, 0, cur, cs);
    Int g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a(r[i], c[j]);
        g = jlt::gcd_of(g, det(m));
      }
    if (g == 0) break;
    out.push_back(g);
  }
  return out;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

Int square_det(const IntMatrix& m) {
  std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return det(a);
}

}  // namespace

TEST(SmithNormalForm, DiagonalizesWithUnimodularFactors) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix a = random_matrix(rng, r, c, -6, 6);
    auto sf = jlt::smith_normal_form(a);
    EXPECT_EQ(sf.left * a * sf.right, sf.diagonal);
    EXPECT_EQ(jlt::abs_value(square_det(sf.left)), 1);
    EXPECT_EQ(jlt::abs_value(square_det(sf.right)), 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j || i >= sf.rank) EXPECT_EQ(sf.diagonal(i, j), 0);
    auto inv = sf.invariants();
    for (std::size_t i = 0; i < inv.size(); ++i) {
      EXPECT_GT(inv[i], 0);
      if (i + 1 < inv.size()) EXPECT_EQ(inv[i + 1] % inv[i], 0);
    }
  }
}

TEST(SmithNormalForm, InvariantsMatchDeterminantalDivisors) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix a = random_matrix(rng, r, c, -9, 9);
    auto dd = determinantal_divisors(a);
    auto inv = jlt::smith_normal_form(a).invariants();
    ASSERT_EQ(inv.size(), dd.size()) << a.str();
    Int prod = 1;
    for (std::size_t i = 0; i < inv.size(); ++i) {
      prod *= inv[i];
      EXPECT_EQ(prod, dd[i]) << a.str();
    }
  }
}

TEST(SmithNormalForm, KnownExample) {
  IntMatrix a = IntMatrix::from_nested({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  auto inv = jlt::smith_normal_form(a).invariants();
  EXPECT_EQ(inv, (std::vector<Int>{2, 6, 12}));
}

TEST(IntegerKernel, SpansAllIntegerSolutions) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 3, c = 2 + rng() % 3;
    IntMatrix a = random_matrix(rng, r, c, -4, 4);
    auto basis = jlt::integer_kernel(a);
    for (const auto& v : basis) EXPECT_TRUE(jlt::is_zero(a * v));
    // Brute force: every small integer solution is an integer combination of the basis.
    std::vector<long long> x(c, -2);
    while (true) {
      IntVector v(c);
      for (std::size_t i = 0; i < c; ++i) v[i] = x[i];
      if (jlt::is_zero(a * v)) {
        IntMatrix b = IntMatrix::from_columns(basis, c);
        if (basis.empty()) EXPECT_TRUE(jlt::is_zero(v));
        else EXPECT_TRUE(jlt::solve_integer(b, v).has_value());
      }
      std::size_t k = 0;
      while (k < c && x[k] == 2) x[k++] = -2;
      if (k == c) break;
      ++x[k];
    }
  }
}

TEST(SolveInteger, DetectsNonIntegralSystems) {
  IntMatrix a = IntMatrix::from_nested({{2, 0}, {0, 3}});
  EXPECT_FALSE(jlt::solve_integer(a, jlt::int_vector({1, 0})).has_value());
  auto x = jlt::solve_integer(a, jlt::int_vector({4, -3}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, jlt::int_vector({2, -1}));
}

TEST(LatticeQuotient, TorsionAndFreeRank) {
  auto q = jlt::lattice_quotient({jlt::int_vector({2, 0, 0}), jlt::int_vector({0, 4, 0})}, 3);
  EXPECT_EQ(q.torsion, (std::vector<Int>{2, 4}));
  EXPECT_EQ(q.free_rank, 1u);
  auto trivial = jlt::lattice_quotient({}, 2);
  EXPECT_TRUE(trivial.torsion.empty());
  EXPECT_EQ(trivial.free_rank, 2u);
}

TEST(RankModP, AgreesWithSmithInvariants) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix a = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, -6, 6);
    auto inv = jlt::smith_normal_form(a).invariants();
    for (long long p : {2, 3, 5}) {
      std::size_t expected = static_cast<std::size_t>(
          std::count_if(inv.begin(), inv.end(), [p](const Int& d) { return d % p != 0; }));
      EXPECT_EQ(jlt::rank_mod_p(a, p), expected);
    }
  }
}

TEST(FiniteAbelianGroup, NormalizesCyclicOrders) {
  auto g = jlt::FiniteAbelianGroup::from_cyclic_orders({4, 6, 1});
  EXPECT_EQ(g.invariant_factors(), (std::vector<Int>{2, 12}));
  EXPECT_EQ(g.order(), 24);
  EXPECT_EQ(g.str(), "Z/2 x Z/12");
  EXPECT_TRUE(jlt::FiniteAbelianGroup::from_cyclic_orders({1, 1}).is_trivial());
  EXPECT_EQ(jlt::FiniteAbelianGroup().str(), "trivial");
  EXPECT_EQ(jlt::FiniteAbelianGroup::from_cyclic_orders({2, 3}), jlt::FiniteAbelianGroup::from_cyclic_orders({6}));
}

TEST(FiniteAbelianGroup, RejectsZeroOrder) {
  EXPECT_THROW(jlt::FiniteAbelianGroup::from_cyclic_orders({0}), std::invalid_argument);
}
