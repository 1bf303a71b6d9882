#pragma once

// Cartan matrices of the irreducible finite types and classification of an
// arbitrary Cartan matrix into labelled components (Bourbaki numbering).

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace jlt {

using CartanMatrix = std::vector<std::vector<long long>>;

struct DynkinComponent {
  char series = 'A';
  std::size_t rank = 0;
  /// Indices into the classified matrix; nodes[k] is the Bourbaki alpha_{k+1}.
  std::vector<std::size_t> nodes;

  std::string label() const { return std::string(1, series) + std::to_string(rank); }
};

struct DynkinType {
  std::vector<DynkinComponent> components;
  std::size_t torus_rank = 0;

  std::size_t semisimple_rank() const {
    std::size_t r = 0;
    for (const auto& c : components) r += c.rank;
    return r;
  }

  /// Sorted multiset of (series, rank); the isomorphism class of the root system.
  std::vector<std::pair<char, std::size_t>> signature() const {
    std::vector<std::pair<char, std::size_t>> s;
    for (const auto& c : components) s.emplace_back(c.series, c.rank);
    std::sort(s.begin(), s.end());
    return s;
  }

  bool all_series_a() const {
    return std::all_of(components.begin(), components.end(), [](const DynkinComponent& c) { return c.series == 'A'; });
  }

  /// "A2 + A2 + A1", components in classification order; "trivial" when empty.
  std::string str() const {
    if (components.empty()) return "trivial";
    std::string s;
    for (std::size_t i = 0; i < components.size(); ++i) s += (i ? " + " : "") + components[i].label();
    return s;
  }
};

inline bool valid_series_rank(char series, std::size_t n) {
  switch (series) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 2;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

/// Cartan matrix C_ij = <alpha_i, alpha_j^vee> of an irreducible type, Bourbaki order.
inline CartanMatrix standard_cartan(char series, std::size_t n) {
  if (!valid_series_rank(series, n))
    throw std::invalid_argument("no irreducible type " + std::string(1, series) + std::to_string(n));
  std::vector<std::tuple<std::size_t, std::size_t, long long>> bonds;  // 1-based
  std::set<std::size_t> short_nodes;
  switch (series) {
    case 'A':
      for (std::size_t i = 1; i < n; ++i) bonds.emplace_back(i, i + 1, 1);
      break;
    case 'B':
    case 'C':
      for (std::size_t i = 1; i + 1 < n; ++i) bonds.emplace_back(i, i + 1, 1);
      bonds.emplace_back(n - 1, n, 2);
      if (series == 'B') {
        short_nodes.insert(n);
      } else {
        for (std::size_t i = 1; i < n; ++i) short_nodes.insert(i);
      }
      break;
    case 'D':
      for (std::size_t i = 1; i + 1 < n; ++i) bonds.emplace_back(i, i + 1, 1);
      bonds.emplace_back(n - 2, n, 1);
      break;
    case 'E':
      bonds.emplace_back(1, 3, 1);
      for (std::size_t i = 3; i < n; ++i) bonds.emplace_back(i, i + 1, 1);
      bonds.emplace_back(2, 4, 1);
      break;
    case 'F':
      bonds = {{1, 2, 1}, {2, 3, 2}, {3, 4, 1}};
      short_nodes = {3, 4};
      break;
    case 'G':
      bonds = {{1, 2, 3}};
      short_nodes = {1};
      break;
  }
  CartanMatrix c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  for (auto [i, j, m] : bonds) {
    bool i_short = short_nodes.count(i) > 0;
    bool j_short = short_nodes.count(j) > 0;
    // the longer root pairs with the shorter coroot to give -m
    c[i - 1][j - 1] = (!i_short && j_short) ? -m : -1;
    c[j - 1][i - 1] = (i_short && !j_short) ? -m : -1;
  }
  return c;
}

inline void validate_cartan(const CartanMatrix& c) {
  const std::size_t k = c.size();
  for (const auto& row : c)
    if (row.size() != k) throw std::invalid_argument("Cartan matrix is not square");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j && c[i][j] != 2) throw std::invalid_argument("Cartan matrix diagonal entry is not 2");
      if (i != j) {
        if (c[i][j] > 0) throw std::invalid_argument("Cartan matrix has a positive off-diagonal entry");
        if ((c[i][j] == 0) != (c[j][i] == 0)) throw std::invalid_argument("Cartan matrix zero pattern is not symmetric");
      }
    }
}

namespace detail {

inline std::vector<std::vector<std::size_t>> cartan_components(const CartanMatrix& c) {
  const std::size_t k = c.size();
  std::vector<int> seen(k, 0);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t s = 0; s < k; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (std::size_t w = 0; w < k; ++w)
        if (w != v && c[v][w] != 0 && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  return comps;
}

[[noreturn]] inline void unclassifiable(const std::string& why) {
  throw std::invalid_argument("unclassifiable Cartan matrix: " + why);
}

// Walk a path graph starting from `start`.
inline std::vector<std::size_t> walk_path(const CartanMatrix& c, const std::vector<std::size_t>& comp, std::size_t start,
                                          std::size_t avoid = static_cast<std::size_t>(-1)) {
  std::vector<std::size_t> order{start};
  std::size_t prev = avoid, cur = start;
  while (true) {
    std::size_t next = static_cast<std::size_t>(-1);
    for (std::size_t w : comp)
      if (w != cur && w != prev && c[cur][w] != 0) {
        next = w;
        break;
      }
    if (next == static_cast<std::size_t>(-1)) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

inline DynkinComponent label_component(const CartanMatrix& c, const std::vector<std::size_t>& comp) {
  const std::size_t k = comp.size();
  if (k == 1) return {'A', 1, comp};

  std::map<std::size_t, std::vector<std::size_t>> adj;
  std::vector<std::pair<std::size_t, std::size_t>> multi;  // (long, short) endpoints of multiple bonds
  long long max_mult = 1;
  std::size_t edges = 0;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      std::size_t i = comp[a], j = comp[b];
      if (c[i][j] == 0) continue;
      ++edges;
      adj[i].push_back(j);
      adj[j].push_back(i);
      long long mult = c[i][j] * c[j][i];
      if (mult > 3) unclassifiable("bond multiplicity above 3");
      if (mult > 1) {
        max_mult = std::max(max_mult, mult);
        if (-c[i][j] > -c[j][i]) multi.emplace_back(i, j);
        else multi.emplace_back(j, i);
      }
    }
  if (edges != k - 1) unclassifiable("Dynkin graph contains a cycle");
  if (multi.size() > 1) unclassifiable("more than one multiple bond");

  std::vector<std::size_t> leaves, branches;
  for (std::size_t v : comp) {
    std::size_t deg = adj[v].size();
    if (deg == 1) leaves.push_back(v);
    if (deg == 3) branches.push_back(v);
    if (deg > 3) unclassifiable("vertex of degree above 3");
  }

  if (branches.empty()) {
    if (multi.empty()) {
      std::size_t start = std::min(leaves[0], leaves[1]);
      return {'A', k, walk_path(c, comp, start)};
    }
    auto [lng, shrt] = multi.front();
    if (max_mult == 3) {
      if (k != 2) unclassifiable("triple bond outside G2");
      return {'G', 2, {shrt, lng}};
    }
    if (k == 2) {
      // rank 2: alpha_1 is the smaller index; B2 if alpha_2 is short
      std::size_t a1 = std::min(comp[0], comp[1]), a2 = std::max(comp[0], comp[1]);
      return {a2 == shrt ? 'B' : 'C', 2, {a1, a2}};
    }
    bool lng_leaf = adj[lng].size() == 1, shrt_leaf = adj[shrt].size() == 1;
    if (shrt_leaf) {
      auto order = walk_path(c, comp, shrt);
      std::reverse(order.begin(), order.end());
      return {'B', k, order};
    }
    if (lng_leaf) {
      auto order = walk_path(c, comp, lng);
      std::reverse(order.begin(), order.end());
      return {'C', k, order};
    }
    if (k != 4) unclassifiable("double bond in the interior of a chain of rank other than 4");
    // F4: alpha_1 - alpha_2 => alpha_3 - alpha_4, alpha_1 long
    std::size_t start = leaves[0];
    auto order = walk_path(c, comp, start);
    if (order[1] != lng) std::reverse(order.begin(), order.end());
    return {'F', 4, order};
  }

  if (!multi.empty()) unclassifiable("branch vertex together with a multiple bond");
  if (branches.size() > 1) unclassifiable("more than one branch vertex");
  std::size_t br = branches.front();
  std::vector<std::vector<std::size_t>> arms;  // each arm listed from the branch outwards
  for (std::size_t w : adj[br]) arms.push_back(walk_path(c, comp, w, br));
  std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.back() < y.back();
  });
  std::size_t a = arms[0].size(), b = arms[1].size(), l = arms[2].size();
  if (a == 1 && b == 1) {
    std::vector<std::size_t> order(arms[2].rbegin(), arms[2].rend());
    order.push_back(br);
    std::size_t x = arms[0][0], y = arms[1][0];
    if (l == 1) {
      // D4: all arms length one; the smallest index starts the chain
      std::vector<std::size_t> leaf{arms[0][0], arms[1][0], arms[2][0]};
      std::sort(leaf.begin(), leaf.end());
      return {'D', 4, {leaf[0], br, leaf[1], leaf[2]}};
    }
    order.push_back(std::min(x, y));
    order.push_back(std::max(x, y));
    return {'D', k, order};
  }
  if (a == 1 && b == 2 && l >= 2 && l <= 4) {
    // E_n: alpha_2 is the short arm, alpha_1 - alpha_3 the length-two arm
    const auto& two = arms[1];
    const auto& rest = arms[2];
    std::vector<std::size_t> order(k);
    order[0] = two[1];
    order[1] = arms[0][0];
    order[2] = two[0];
    order[3] = br;
    for (std::size_t i = 0; i < rest.size(); ++i) order[4 + i] = rest[i];
    return {'E', k, order};
  }
  unclassifiable("branch arms do not match D or E");
}

}  // namespace detail

/// Classify a (validated) Cartan matrix. Components are ordered by their smallest index.
inline DynkinType classify_cartan(const CartanMatrix& c, std::size_t torus_rank = 0) {
  validate_cartan(c);
  DynkinType t;
  t.torus_rank = torus_rank;
  for (const auto& comp : detail::cartan_components(c)) {
    DynkinComponent dc = detail::label_component(c, comp);
    CartanMatrix ref = standard_cartan(dc.series, dc.rank);
    for (std::size_t i = 0; i < dc.rank; ++i)
      for (std::size_t j = 0; j < dc.rank; ++j)
        if (c[dc.nodes[i]][dc.nodes[j]] != ref[i][j])
          detail::unclassifiable("component does not match the standard " + dc.label() + " matrix");
    t.components.push_back(std::move(dc));
  }
  return t;
}

/// Absolute determinant of a small integer matrix (fraction-free elimination).
inline long long cartan_determinant(const CartanMatrix& c) {
  const std::size_t n = c.size();
  std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = c[i][j];
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  __int128 det = n ? m[n - 1][n - 1] * sign : 1;
  return static_cast<long long>(det < 0 ? -det : det);
}

}  // namespace jlt
