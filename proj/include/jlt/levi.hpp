#pragma once

// Levi subgroups M_theta: derived type, split component, the sandwich
// prod SL_{n_i} <= M <= prod GL_{n_i} and the GL envelope M~.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "jlt/abelian.hpp"
#include "jlt/error.hpp"
#include "jlt/lattice.hpp"
#include "jlt/rootdata.hpp"
#include "jlt/weyl.hpp"

namespace jlt {

class LeviDescriptor {
public:
  LeviDescriptor(BasedRootDatum ambient, std::vector<std::size_t> theta) : ambient_(std::move(ambient)) {
    validate_subset(ambient_, theta);
    std::sort(theta.begin(), theta.end());
    theta_ = std::move(theta);
  }

  /// The Levi obtained by deleting the given simple roots from Delta.
  static LeviDescriptor removing(BasedRootDatum ambient, const std::vector<std::size_t>& removed) {
    validate_subset(ambient, removed);
    std::vector<std::size_t> theta;
    for (std::size_t i = 0; i < ambient.semisimple_rank(); ++i)
      if (std::find(removed.begin(), removed.end(), i) == removed.end()) theta.push_back(i);
    return LeviDescriptor(std::move(ambient), theta);
  }

  const BasedRootDatum& ambient() const { return ambient_; }
  const std::vector<std::size_t>& theta() const { return theta_; }

  std::vector<std::size_t> removed() const {
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < ambient_.semisimple_rank(); ++i)
      if (!std::binary_search(theta_.begin(), theta_.end(), i)) r.push_back(i);
    return r;
  }

private:
  BasedRootDatum ambient_;
  std::vector<std::size_t> theta_;
};

inline BasedRootDatum levi_datum(const LeviDescriptor& desc) {
  const auto& g = desc.ambient();
  std::vector<IntVector> roots, coroots;
  for (auto j : desc.theta()) {
    roots.push_back(g.simple_roots()[j]);
    coroots.push_back(g.simple_coroots()[j]);
  }
  return BasedRootDatum(g.rank(), roots, coroots, g.name());
}

inline bool is_maximal(const LeviDescriptor& desc) {
  return desc.theta().size() + 1 == desc.ambient().semisimple_rank();
}

enum class BlockKind { gl, sl, sandwich };

inline const char* block_kind_name(BlockKind k) {
  switch (k) {
    case BlockKind::gl: return "GL";
    case BlockKind::sl: return "SL";
    default: return "sandwich";
  }
}

/// One GL_{n} factor of the envelope, attached to a type A_{n-1} component of theta.
struct EnvelopeBlock {
  std::size_t size = 0;
  std::vector<std::size_t> nodes;  // ambient simple-root indices in chain order
  BlockKind kind = BlockKind::sandwich;
};

struct GlEnvelope {
  std::vector<EnvelopeBlock> blocks;  // ordered by largest simple-root index
  /// Minimal number of GL_1 factors needed to embed M in prod GL_{n_i} x GL_1^k.
  std::size_t central_gl1 = 0;
  /// M is isomorphic to prod GL_{n_i} x GL_1^central_gl1.
  bool equals_levi = false;
  /// M is a product of GL and SL blocks and a split torus.
  bool product_form = false;
  /// GL_1 count of that product (when product_form).
  std::size_t product_gl1 = 0;
  /// The GL_1 count was matched against its upper bound (always expected).
  bool certified = false;

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> s;
    for (const auto& b : blocks) s.push_back(b.size);
    return s;
  }
};

struct LeviReport {
  DynkinType derived_type;
  std::size_t split_component_rank = 0;
  FiniteAbelianGroup derived_pi1;
  bool condition_one = false;
  bool maximal = false;
  std::optional<GlEnvelope> envelope;

  std::optional<std::vector<std::size_t>> gl_envelope() const {
    if (!envelope) return std::nullopt;
    return envelope->sizes();
  }
};

namespace detail {

inline std::size_t unit_invariant_count(const std::vector<IntVector>& rows, std::size_t cols) {
  if (rows.empty() || cols == 0) return 0;
  std::size_t t = 0;
  for (const Int& d : smith_normal_form(IntMatrix::from_rows(rows, cols)).invariants())
    if (d == 1) ++t;
  return t;
}

inline std::vector<long long> prime_factors(long long n) {
  std::vector<long long> p;
  for (long long q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      p.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) p.push_back(n);
  return p;
}

inline Int floor_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// Largest number of unit invariant factors over the rows w_i = base_i + moduli_i * Z^s.
struct UnitSearch {
  std::size_t best = 0;
  bool certified = false;
};

inline UnitSearch max_unit_invariants(const std::vector<IntVector>& base, const std::vector<long long>& moduli,
                                      std::size_t s) {
  const std::size_t b = base.size();
  UnitSearch out;
  if (b == 0 || s == 0) {
    out.certified = true;
    return out;
  }
  if (b == 1 && s == 1) {
    // the only unimodular 1 x 1 lifts are +1 and -1
    const Int r = floor_mod(base[0][0], Int(moduli[0]));
    out.best = (r == floor_mod(Int(1), Int(moduli[0])) || r == floor_mod(Int(-1), Int(moduli[0]))) ? 1 : 0;
    out.certified = true;
    return out;
  }
  // upper bound: rank mod p of the rows fixed mod p, plus the rows free mod p
  std::size_t bound = std::min(b, s);
  std::set<long long> primes;
  for (auto m : moduli)
    for (auto p : prime_factors(m)) primes.insert(p);
  for (long long p : primes) {
    std::vector<IntVector> fixed;
    std::size_t free_rows = 0;
    for (std::size_t i = 0; i < b; ++i) {
      if (moduli[i] % p == 0) fixed.push_back(base[i]);
      else ++free_rows;
    }
    std::size_t r = fixed.empty() ? 0 : rank_mod_p(IntMatrix::from_rows(fixed, s), p);
    bound = std::min(bound, std::min(s, r + free_rows));
  }

  std::vector<IntVector> w(b, IntVector(s));
  auto evaluate = [&](const std::vector<IntVector>& rows) {
    std::size_t t = unit_invariant_count(rows, s);
    out.best = std::max(out.best, t);
    return out.best >= bound;
  };
  // centered representatives
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t k = 0; k < s; ++k) {
      Int m = moduli[i];
      Int r = floor_mod(base[i][k], m);
      if (2 * r > m) r -= m;
      w[i][k] = r;
    }
  if (evaluate(w)) {
    out.certified = true;
    return out;
  }
  // single-entry perturbations
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t k = 0; k < s; ++k)
      for (int sign : {1, -1}) {
        auto v = w;
        v[i][k] += sign * moduli[i];
        if (evaluate(v)) {
          out.certified = true;
          return out;
        }
      }
  // seeded random lifts
  std::mt19937 rng(20240611u);
  std::uniform_int_distribution<int> shift(-3, 3);
  for (int iter = 0; iter < 4000; ++iter) {
    auto v = w;
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t k = 0; k < s; ++k) v[i][k] += shift(rng) * moduli[i];
    if (evaluate(v)) {
      out.certified = true;
      return out;
    }
  }
  return out;
}

}  // namespace detail

namespace detail {

inline GlEnvelope compute_envelope(const LeviDescriptor& desc, const DynkinType& derived) {
  const auto& g = desc.ambient();
  const auto& theta = desc.theta();
  const std::size_t r = g.rank();

  // psi(f) = (<f, alpha_j^vee>)_{j in theta}; its kernel Ann has rank s
  std::vector<IntVector> psi_rows;
  for (auto j : theta) psi_rows.push_back(g.simple_coroots()[j]);
  IntMatrix psi = IntMatrix::from_rows(psi_rows, r);
  std::vector<IntVector> ann = theta.empty() ? std::vector<IntVector>{} : integer_kernel(psi);
  if (theta.empty())
    for (std::size_t i = 0; i < r; ++i) ann.push_back(unit(r, i));
  const std::size_t s = ann.size();
  IntMatrix kmat = IntMatrix::from_columns(ann, r);

  GlEnvelope env;
  for (const auto& comp : derived.components) {
    EnvelopeBlock blk;
    blk.size = comp.rank + 1;
    for (auto local : comp.nodes) blk.nodes.push_back(theta[local]);
    env.blocks.push_back(blk);
  }
  std::sort(env.blocks.begin(), env.blocks.end(), [](const EnvelopeBlock& a, const EnvelopeBlock& b) {
    return *std::max_element(a.nodes.begin(), a.nodes.end()) < *std::max_element(b.nodes.begin(), b.nodes.end());
  });

  // determinant characters g_i = n_i c_i - sum_p (n_i - p) alpha_{j_p}, in Ann coordinates
  std::vector<IntVector> y0;
  std::vector<long long> moduli;
  for (const auto& blk : env.blocks) {
    const long long n = static_cast<long long>(blk.size);
    IntVector target(theta.size());
    auto pos = std::find(theta.begin(), theta.end(), blk.nodes.front()) - theta.begin();
    target[static_cast<std::size_t>(pos)] = 1;
    auto c = solve_integer(psi, target);
    if (!c) throw std::logic_error("standard weight of a Levi block is not a character");
    IntVector det(r);
    for (std::size_t t = 0; t < r; ++t) det[t] = n * (*c)[t];
    for (std::size_t p = 0; p < blk.nodes.size(); ++p) {
      const auto& a = g.simple_roots()[blk.nodes[p]];
      for (std::size_t t = 0; t < r; ++t) det[t] -= (n - static_cast<long long>(p) - 1) * a[t];
    }
    auto y = solve_integer(kmat, det);
    if (!y) throw std::logic_error("determinant character is not orthogonal to the Levi coroots");
    y0.push_back(*y);
    moduli.push_back(n);
  }

  const std::size_t b = env.blocks.size();
  UnitSearch all = max_unit_invariants(y0, moduli, s);
  env.central_gl1 = s - all.best;
  env.equals_levi = all.best == b;
  env.certified = all.certified;

  std::vector<IntVector> gl_rows;
  std::vector<long long> gl_moduli;
  std::vector<bool> sl(b, false);
  for (std::size_t i = 0; i < b; ++i) {
    sl[i] = std::all_of(y0[i].begin(), y0[i].end(), [&](const Int& x) { return x % moduli[i] == 0; });
    if (!sl[i]) {
      gl_rows.push_back(y0[i]);
      gl_moduli.push_back(moduli[i]);
    }
  }
  if (env.equals_levi) {
    env.product_form = true;
    env.product_gl1 = env.central_gl1;
    for (auto& blk : env.blocks) blk.kind = BlockKind::gl;
  } else {
    UnitSearch part = max_unit_invariants(gl_rows, gl_moduli, s);
    env.certified = env.certified && part.certified;
    env.product_form = part.best == gl_rows.size();
    if (env.product_form) {
      env.product_gl1 = s - gl_rows.size();
      for (std::size_t i = 0; i < b; ++i) env.blocks[i].kind = sl[i] ? BlockKind::sl : BlockKind::gl;
    }
  }
  return env;
}

}  // namespace detail

inline LeviReport analyze_levi(const LeviDescriptor& desc) {
  const auto& g = desc.ambient();
  BasedRootDatum m = levi_datum(desc);
  LeviReport rep;
  // components of M come back indexed locally 0..|theta|-1
  CartanMatrix local(desc.theta().size(), std::vector<long long>(desc.theta().size()));
  for (std::size_t a = 0; a < desc.theta().size(); ++a)
    for (std::size_t b = 0; b < desc.theta().size(); ++b) local[a][b] = g.cartan()[desc.theta()[a]][desc.theta()[b]];
  rep.derived_type = classify_cartan(local, g.rank() - desc.theta().size());
  rep.split_component_rank = g.rank() - desc.theta().size();
  rep.derived_pi1 = fundamental_group(m);
  rep.condition_one = rep.derived_type.all_series_a() && rep.derived_pi1.is_trivial();
  rep.maximal = is_maximal(desc);
  if (rep.condition_one) rep.envelope = detail::compute_envelope(desc, rep.derived_type);
  return rep;
}

/// Parse "a4", "4", "alpha4", comma separated, into 0-based indices.
inline std::vector<std::size_t> parse_root_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    std::size_t lead = item.find_first_not_of(" \t");
    std::size_t trail = item.find_last_not_of(" \t");
    item = lead == std::string::npos ? "" : item.substr(lead, trail - lead + 1);
    std::string digits = item;
    for (const char* prefix : {"alpha", "a"})
      if (digits.rfind(prefix, 0) == 0) {
        digits = digits.substr(std::string(prefix).size());
        break;
      }
    if (digits.empty() || digits.size() > 4 || digits.find_first_not_of("0123456789") != std::string::npos)
      throw input_error("bad simple root '" + item + "' (expected a1, a2, ...)", pos);
    long long v = std::stoll(digits);
    if (v < 1) throw input_error("simple roots are numbered from 1", pos);
    out.push_back(static_cast<std::size_t>(v - 1));
    pos = end + 1;
  }
  return out;
}

}  // namespace jlt
