#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "jlt/grothendieck.hpp"

using jlt::BasisElement;
using jlt::GroupSide;
using jlt::VirtualElement;

namespace {

void compositions(long long n, std::vector<long long>& cur, std::vector<std::vector<long long>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (long long p = 1; p <= n; ++p) {
    cur.push_back(p);
    compositions(n - p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<long long>> all_compositions(long long n) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  compositions(n, cur, out);
  return out;
}

BasisElement labelled(const std::vector<long long>& comp, const std::string& prefix) {
  BasisElement b{comp, {}};
  for (std::size_t i = 0; i < comp.size(); ++i) b.labels.push_back(prefix + std::to_string(i + 1));
  return b;
}

VirtualElement random_element(std::mt19937& rng, long long n, const std::vector<std::vector<long long>>& comps) {
  VirtualElement x(GroupSide{n, 1});
  const int terms = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    const auto& comp = comps[rng() % comps.size()];
    x.add(labelled(comp, rng() % 2 ? "a" : "b"), static_cast<long long>(rng() % 9) - 4);
  }
  return x;
}

}  // namespace

TEST(LJ, StatedExamples) {
  const GroupSide gl2{2, 1};
  VirtualElement st(gl2);
  st.add({{2}, {"St"}}, 1);
  EXPECT_EQ(jlt::lj_map(st, 2).str(), "(1):St'");
  EXPECT_EQ(jlt::lj_map(jlt::gl2_trivial(), 2).str(), "-(1):St'");
  VirtualElement torus(gl2);
  torus.add({{1, 1}, {"x", "y"}}, 1);
  EXPECT_TRUE(jlt::lj_map(torus, 2).is_zero());
  EXPECT_EQ(jlt::lj_map(torus, 2).str(), "0");
  EXPECT_EQ(jlt::lj_map(st, 2).side().str(), "GL_1(D_2)");
}

TEST(LJ, PreimageIsASectionForAllDivisors) {
  for (long long n = 1; n <= 12; ++n)
    for (long long d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const long long m = n / d;
      for (const auto& comp : all_compositions(m)) {
        VirtualElement y(GroupSide{m, d});
        auto b = labelled(comp, "p");
        for (auto& t : b.labels) t += "'";
        y.add(b, 3);
        auto x = jlt::lj_preimage(y);
        EXPECT_TRUE(x.side().split());
        EXPECT_EQ(x.side().m, n);
        EXPECT_EQ(jlt::lj_map(x, d), y) << n << " " << d;
      }
    }
}

TEST(LJ, KernelIsSpannedByNonDivisibleCompositions) {
  for (long long n = 1; n <= 9; ++n)
    for (long long d = 1; d <= n; ++d) {
      if (n % d != 0) {
        EXPECT_THROW(jlt::lj_map(VirtualElement(GroupSide{n, 1}), d), jlt::domain_error);
        continue;
      }
      for (const auto& comp : all_compositions(n)) {
        VirtualElement x(GroupSide{n, 1});
        x.add(labelled(comp, "a"), 1);
        bool divisible = true;
        for (auto part : comp) divisible = divisible && part % d == 0;
        EXPECT_EQ(jlt::lj_map(x, d).is_zero(), !divisible);
        EXPECT_EQ(jlt::is_d_compatible(x, d), divisible);
      }
    }
}

TEST(LJ, LinearOnRandomElements) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    const long long n = 2 + static_cast<long long>(rng() % 7);
    std::vector<long long> divisors;
    for (long long d = 1; d <= n; ++d)
      if (n % d == 0) divisors.push_back(d);
    const long long d = divisors[rng() % divisors.size()];
    const auto comps = all_compositions(n);
    auto x = random_element(rng, n, comps);
    auto y = random_element(rng, n, comps);
    const long long a = static_cast<long long>(rng() % 7) - 3, b = static_cast<long long>(rng() % 7) - 3;
    EXPECT_EQ(jlt::lj_map(x.scaled(a) + y.scaled(b), d), jlt::lj_map(x, d).scaled(a) + jlt::lj_map(y, d).scaled(b));
    EXPECT_TRUE(jlt::lj_map(x - x, d).is_zero());
  }
}

TEST(LJ, CompatibleWithParabolicInduction) {
  // Concatenating compositions is induction from a Levi; the map respects it.
  std::mt19937 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const long long d = 1 + static_cast<long long>(rng() % 3);
    const long long n1 = d * (1 + static_cast<long long>(rng() % 3)), n2 = d * (1 + static_cast<long long>(rng() % 3));
    const auto c1 = all_compositions(n1), c2 = all_compositions(n2);
    const auto& a = c1[rng() % c1.size()];
    const auto& b = c2[rng() % c2.size()];
    std::vector<long long> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    VirtualElement xa(GroupSide{n1, 1}), xb(GroupSide{n2, 1}), xab(GroupSide{n1 + n2, 1});
    auto ba = labelled(a, "u"), bb = labelled(b, "v");
    xa.add(ba, 1);
    xb.add(bb, 1);
    BasisElement both{ab, ba.labels};
    both.labels.insert(both.labels.end(), bb.labels.begin(), bb.labels.end());
    xab.add(both, 1);
    auto la = jlt::lj_map(xa, d), lb = jlt::lj_map(xb, d), lab = jlt::lj_map(xab, d);
    if (la.is_zero() || lb.is_zero()) {
      EXPECT_TRUE(lab.is_zero());
      continue;
    }
    const auto& [ta, ca] = *la.terms().begin();
    const auto& [tb, cb] = *lb.terms().begin();
    BasisElement expected{ta.composition, ta.labels};
    expected.composition.insert(expected.composition.end(), tb.composition.begin(), tb.composition.end());
    expected.labels.insert(expected.labels.end(), tb.labels.begin(), tb.labels.end());
    ASSERT_EQ(lab.terms().size(), 1u);
    EXPECT_EQ(lab.terms().begin()->first, expected);
    EXPECT_EQ(lab.terms().begin()->second, ca * cb);
  }
}

TEST(LeviTransfers, DividesEachBlock) {
  EXPECT_EQ(jlt::levi_transfers({2, 4}, 2), (std::vector<long long>{1, 2}));
  EXPECT_FALSE(jlt::levi_transfers({1, 3}, 2).has_value());
  EXPECT_THROW(jlt::levi_transfers({1, 2}, 2), jlt::domain_error);
  EXPECT_THROW(jlt::levi_transfers({2}, 0), jlt::input_error);
  for (long long n = 1; n <= 10; ++n)
    for (const auto& comp : all_compositions(n))
      for (long long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        auto t = jlt::levi_transfers(comp, d);
        bool divisible = true;
        for (auto part : comp) divisible = divisible && part % d == 0;
        ASSERT_EQ(t.has_value(), divisible);
        if (t)
          for (std::size_t i = 0; i < comp.size(); ++i) EXPECT_EQ((*t)[i] * d, comp[i]);
      }
}

TEST(CharacterSign, ParityOfCodimension) {
  EXPECT_EQ(jlt::character_sign(4, 2), 1);
  EXPECT_EQ(jlt::character_sign(3, 1), 1);
  EXPECT_EQ(jlt::character_sign(2, 1), -1);
  EXPECT_EQ(jlt::character_sign(6, 3), -1);
  EXPECT_THROW(jlt::character_sign(6, 4), jlt::input_error);
}

TEST(VirtualElement, PrintParseRoundTrip) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const long long n = 1 + static_cast<long long>(rng() % 6);
    auto x = random_element(rng, n, all_compositions(n));
    EXPECT_EQ(jlt::parse_virtual(x.str(), x.side()), x) << x.str();
  }
  const GroupSide gl6{6, 1};
  auto x = jlt::parse_virtual("3*(2,4):a,b - (6):c", gl6);
  EXPECT_EQ(x.str(), "3*(2,4):a,b - (6):c");
  EXPECT_EQ(jlt::parse_virtual("2 (2,4):a,b + (2,4):a,b", gl6).str(), "3*(2,4):a,b");
  EXPECT_TRUE(jlt::parse_virtual("0", gl6).is_zero());
  EXPECT_EQ(jlt::parse_virtual("triv", GroupSide{2, 1}), jlt::gl2_trivial());
  EXPECT_EQ(jlt::parse_virtual("(1):ρ′", GroupSide{1, 2}).str(), "(1):ρ′");
}

TEST(VirtualElement, ParseErrors) {
  const GroupSide gl4{4, 1};
  for (const char* bad : {"", "(2,1):a,b", "(2,2):a", "(4)", "(4):a +", "2*", "(0,4):a,b", "triv", "(4):a$"})
    EXPECT_THROW(jlt::parse_virtual(bad, gl4), jlt::input_error) << bad;
  VirtualElement y(gl4);
  EXPECT_THROW(y.add({{3}, {"a"}}, 1), jlt::input_error);
  EXPECT_THROW(y + VirtualElement(GroupSide{2, 2}), jlt::input_error);
  EXPECT_THROW(jlt::lj_map(VirtualElement(GroupSide{2, 2}), 2), jlt::input_error);
}

TEST(GlobalCompatibility, ConjunctionOverNonSplitPlaces) {
  const GroupSide gl4{4, 1};
  auto good = jlt::parse_virtual("(2,2):a,b", gl4);
  auto bad = jlt::parse_virtual("(1,3):a,b", gl4);
  EXPECT_TRUE(jlt::global_d_compatibility({{"v1", 2}, {"v2", 1}}, {{"v1", good}, {"v2", bad}}));
  EXPECT_FALSE(jlt::global_d_compatibility({{"v1", 2}, {"v2", 2}}, {{"v1", good}, {"v2", bad}}));
  EXPECT_FALSE(jlt::global_d_compatibility({{"v1", 4}}, {{"v1", good}}));
  EXPECT_TRUE(jlt::global_d_compatibility({}, {}));
  EXPECT_THROW(jlt::global_d_compatibility({{"v3", 2}}, {{"v1", good}}), jlt::input_error);
}
