#pragma once

// Weyl group computations: order by orbit enumeration, longest elements,
// the element w with w(theta) in Delta, reduced roots and rank-one Levis.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "jlt/error.hpp"
#include "jlt/lattice.hpp"
#include "jlt/rootdata.hpp"

namespace jlt {

inline constexpr std::size_t weyl_enumeration_bound = 6;

/// Word in the simple reflections, read left to right as a product:
/// letters {a, b} means s_a s_b (s_b acts first).
struct WeylWord {
  std::vector<std::size_t> letters;

  std::string str() const {
    if (letters.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) s += (i ? " " : "") + std::string("s") + std::to_string(letters[i] + 1);
    return s;
  }
};

namespace detail {

struct VectorHash {
  std::size_t operator()(const std::vector<long long>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (long long x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

inline long long checked_sub_mul(long long a, long long b, long long c) {
  long long prod = 0, out = 0;
  if (__builtin_mul_overflow(b, c, &prod) || __builtin_sub_overflow(a, prod, &out))
    throw std::overflow_error("Weyl orbit coordinate overflow");
  return out;
}

}  // namespace detail

/// |W| as the size of the orbit of a regular dominant weight (rho, in
/// fundamental-weight coordinates), which W acts on simply transitively.
inline unsigned long long weyl_group_order(const BasedRootDatum& d) {
  const std::size_t k = d.semisimple_rank();
  if (k > weyl_enumeration_bound)
    throw domain_error("Weyl group enumeration is limited to semisimple rank " + std::to_string(weyl_enumeration_bound));
  const CartanMatrix& c = d.cartan();
  using Weight = std::vector<long long>;
  std::unordered_set<Weight, detail::VectorHash> seen;
  std::vector<Weight> frontier{Weight(k, 2)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& p : frontier)
      for (std::size_t i = 0; i < k; ++i) {
        Weight q = p;
        for (std::size_t j = 0; j < k; ++j) q[j] = detail::checked_sub_mul(p[j], p[i], c[i][j]);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

/// s_j acting on a vector of the character lattice: x - <x, alpha_j^vee> alpha_j.
inline IntVector reflect(const BasedRootDatum& d, std::size_t j, const IntVector& x) {
  Int p = dot(x, d.simple_coroots()[j]);
  IntVector y = x;
  for (std::size_t t = 0; t < y.size(); ++t) y[t] -= p * d.simple_roots()[j][t];
  return y;
}

/// The word acting on x (rightmost letter first).
inline IntVector apply_word(const BasedRootDatum& d, const WeylWord& w, IntVector x) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) x = reflect(d, *it, x);
  return x;
}

inline void validate_subset(const BasedRootDatum& d, const std::vector<std::size_t>& theta) {
  std::set<std::size_t> s;
  for (auto j : theta) {
    if (j >= d.semisimple_rank())
      throw input_error("simple root index " + std::to_string(j + 1) + " out of range 1.." +
                        std::to_string(d.semisimple_rank()));
    if (!s.insert(j).second) throw input_error("simple root index " + std::to_string(j + 1) + " repeated");
  }
}

/// Longest element of the parabolic subgroup W_theta, as a reduced word.
inline WeylWord longest_element(const BasedRootDatum& d, const std::vector<std::size_t>& theta) {
  validate_subset(d, theta);
  const std::size_t k = d.semisimple_rank();
  const CartanMatrix& c = d.cartan();
  std::vector<long long> p(k, 0);
  for (auto j : theta) p[j] = 2;
  std::vector<std::size_t> record;
  while (true) {
    auto it = std::find_if(theta.begin(), theta.end(), [&](std::size_t j) { return p[j] > 0; });
    if (it == theta.end()) break;
    const std::size_t i = *it;
    const long long pi = p[i];
    for (std::size_t j = 0; j < k; ++j) p[j] = detail::checked_sub_mul(p[j], pi, c[i][j]);
    record.push_back(i);
  }
  return {std::vector<std::size_t>(record.rbegin(), record.rend())};
}

/// A reduced word for the same element, read off from the orbit of rho.
inline WeylWord reduce_word(const BasedRootDatum& d, const WeylWord& w) {
  const std::size_t k = d.semisimple_rank();
  const CartanMatrix& c = d.cartan();
  std::vector<long long> p(k, 2);
  auto act = [&](std::size_t i) {
    const long long pi = p[i];
    for (std::size_t j = 0; j < k; ++j) p[j] = detail::checked_sub_mul(p[j], pi, c[i][j]);
  };
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) act(*it);
  WeylWord out;
  while (true) {
    auto neg = std::find_if(p.begin(), p.end(), [](long long x) { return x < 0; });
    if (neg == p.end()) break;
    const std::size_t i = static_cast<std::size_t>(neg - p.begin());
    act(i);
    out.letters.push_back(i);
  }
  return out;
}

struct WThetaResult {
  WeylWord word;
  /// image[i] is the simple root that theta[i] is sent to.
  std::vector<std::size_t> image;
};

/// w = w_{l,Delta} w_{l,theta}; maps theta into Delta. Verified on the lattice.
inline WThetaResult find_w_theta(const BasedRootDatum& d, const std::vector<std::size_t>& theta) {
  validate_subset(d, theta);
  std::vector<std::size_t> all(d.semisimple_rank());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  WeylWord w = longest_element(d, all);
  WeylWord wt = longest_element(d, theta);
  w.letters.insert(w.letters.end(), wt.letters.begin(), wt.letters.end());
  WThetaResult r{reduce_word(d, w), {}};
  for (auto j : theta) {
    IntVector img = apply_word(d, w, d.simple_roots()[j]);
    auto it = std::find(d.simple_roots().begin(), d.simple_roots().end(), img);
    if (it == d.simple_roots().end()) throw std::logic_error("w_theta does not map theta into Delta");
    r.image.push_back(static_cast<std::size_t>(it - d.simple_roots().begin()));
  }
  return r;
}

struct RestrictedRoot {
  /// Primitive coefficient vector on the removed simple roots (Delta minus theta, in order).
  IntVector direction;
  /// Indices into positive_roots(datum) of the roots restricting to a positive multiple.
  std::vector<std::size_t> preimages;
  /// The distinct multiples c with beta|A_M = c * direction.
  std::vector<Int> multiples;
};

inline std::vector<RestrictedRoot> reduced_roots(const BasedRootDatum& d, const std::vector<std::size_t>& theta) {
  validate_subset(d, theta);
  const auto roots = positive_roots(d);
  std::vector<std::size_t> removed;
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i)
    if (std::find(theta.begin(), theta.end(), i) == theta.end()) removed.push_back(i);
  std::vector<RestrictedRoot> classes;
  for (std::size_t idx = 0; idx < roots.size(); ++idx) {
    if (roots[idx].supported_on(theta)) continue;
    // the theta roots restrict to zero, the removed ones to a basis of X^*(A_M) tensor Q
    IntVector restricted(removed.size());
    for (std::size_t t = 0; t < removed.size(); ++t) restricted[t] = roots[idx].coefficients[removed[t]];
    Int g = content(restricted);
    if (g == 0) throw std::logic_error("root outside theta restricts trivially to A_M");
    for (auto& x : restricted) x /= g;
    auto it = std::find_if(classes.begin(), classes.end(), [&](const RestrictedRoot& r) { return r.direction == restricted; });
    if (it == classes.end()) {
      classes.push_back({restricted, {}, {}});
      it = classes.end() - 1;
    }
    it->preimages.push_back(idx);
    if (std::find(it->multiples.begin(), it->multiples.end(), g) == it->multiples.end()) it->multiples.push_back(g);
  }
  for (auto& c : classes) std::sort(c.multiples.begin(), c.multiples.end());
  return classes;
}

struct RankOneLevi {
  RestrictedRoot alpha;
  BasedRootDatum datum;  // M_alpha, on the same lattices
  DynkinType type;
};

/// For each reduced root alpha, M_alpha = Z_G((ker alpha on A_M)^0): its roots
/// are those of M plus the roots restricting to multiples of alpha.
inline std::vector<RankOneLevi> rank_one_decomposition(const BasedRootDatum& d, const std::vector<std::size_t>& theta) {
  const auto roots = positive_roots(d);
  std::vector<RankOneLevi> out;
  for (auto& cls : reduced_roots(d, theta)) {
    std::vector<std::size_t> members = cls.preimages;
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (roots[i].supported_on(theta)) members.push_back(i);
    std::set<std::vector<long long>> member_set;
    for (auto i : members) member_set.insert(roots[i].coefficients);
    std::sort(members.begin(), members.end(), [&](std::size_t x, std::size_t y) {
      const auto& a = roots[x].coefficients;
      const auto& b = roots[y].coefficients;
      auto lead = [](const std::vector<long long>& v) {
        return static_cast<std::size_t>(std::find_if(v.begin(), v.end(), [](long long c) { return c != 0; }) - v.begin());
      };
      if (lead(a) != lead(b)) return lead(a) < lead(b);
      return a < b;
    });
    std::vector<IntVector> simple, simple_co;
    for (auto i : members) {
      const auto& beta = roots[i].coefficients;
      bool decomposable = false;
      for (auto j : members) {
        std::vector<long long> rest(beta.size());
        bool nonneg = true;
        for (std::size_t t = 0; t < beta.size(); ++t) {
          rest[t] = beta[t] - roots[j].coefficients[t];
          if (rest[t] < 0) nonneg = false;
        }
        if (nonneg && i != j && member_set.count(rest)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) {
        simple.push_back(roots[i].vector);
        simple_co.push_back(roots[i].coroot);
      }
    }
    BasedRootDatum m(d.rank(), simple, simple_co, d.name() + " M_alpha");
    if (m.semisimple_rank() != theta.size() + 1)
      throw std::logic_error("rank-one Levi has unexpected semisimple rank");
    DynkinType t = m.type();
    out.push_back({std::move(cls), std::move(m), std::move(t)});
  }
  return out;
}

}  // namespace jlt
