#pragma once

// Based root data in explicit coordinates and the catalog of split groups.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jlt/abelian.hpp"
#include "jlt/dynkin.hpp"
#include "jlt/error.hpp"
#include "jlt/lattice.hpp"

namespace jlt {

/// Character lattice X = Z^rank with simple roots, cocharacter lattice Z^rank
/// with simple coroots; the pairing is the dot product.
class BasedRootDatum {
public:
  BasedRootDatum() = default;

  BasedRootDatum(std::size_t rank, std::vector<IntVector> simple_roots, std::vector<IntVector> simple_coroots,
                 std::string name)
      : rank_(rank), roots_(std::move(simple_roots)), coroots_(std::move(simple_coroots)), name_(std::move(name)) {
    if (rank_ == 0) throw input_error("root datum rank must be positive");
    if (roots_.size() != coroots_.size()) throw input_error("number of simple roots and coroots differ");
    if (roots_.size() > rank_) throw input_error("more simple roots than the lattice rank");
    for (const auto& v : roots_)
      if (v.size() != rank_) throw input_error("simple root has the wrong dimension");
    for (const auto& v : coroots_)
      if (v.size() != rank_) throw input_error("simple coroot has the wrong dimension");
    cartan_ = compute_cartan();
    try {
      type_ = classify_cartan(cartan_, rank_ - roots_.size());
    } catch (const std::invalid_argument& e) {
      throw input_error(std::string("invalid root datum: ") + e.what());
    }
  }

  std::size_t rank() const { return rank_; }
  std::size_t semisimple_rank() const { return roots_.size(); }
  const std::vector<IntVector>& simple_roots() const { return roots_; }
  const std::vector<IntVector>& simple_coroots() const { return coroots_; }
  const std::string& name() const { return name_; }
  const CartanMatrix& cartan() const { return cartan_; }
  const DynkinType& type() const { return type_; }
  bool is_semisimple() const { return roots_.size() == rank_; }

  BasedRootDatum renamed(std::string name) const {
    BasedRootDatum d = *this;
    d.name_ = std::move(name);
    return d;
  }

private:
  CartanMatrix compute_cartan() const {
    const std::size_t k = roots_.size();
    CartanMatrix c(k, std::vector<long long>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) c[i][j] = to_int64(dot(roots_[i], coroots_[j]));
    return c;
  }

  std::size_t rank_ = 0;
  std::vector<IntVector> roots_;
  std::vector<IntVector> coroots_;
  std::string name_;
  CartanMatrix cartan_;
  DynkinType type_;
};

inline DynkinType classify(const BasedRootDatum& d) { return d.type(); }

/// Torsion of X_* / (span of simple coroots).
inline FiniteAbelianGroup fundamental_group(const BasedRootDatum& d) {
  return FiniteAbelianGroup::from_cyclic_orders(lattice_quotient(d.simple_coroots(), d.rank()).torsion);
}

/// Torsion of X^* / (span of simple roots): the character group of the
/// component group of the center.
inline FiniteAbelianGroup center_character_group(const BasedRootDatum& d) {
  return FiniteAbelianGroup::from_cyclic_orders(lattice_quotient(d.simple_roots(), d.rank()).torsion);
}

inline BasedRootDatum dual(const BasedRootDatum& d) {
  return BasedRootDatum(d.rank(), d.simple_coroots(), d.simple_roots(), "dual " + d.name());
}

/// Semisimple simply connected datum with the given Cartan matrix.
inline BasedRootDatum simply_connected_from_cartan(const CartanMatrix& c, const std::string& name) {
  const std::size_t k = c.size();
  std::vector<IntVector> roots(k, IntVector(k)), coroots(k, IntVector(k));
  for (std::size_t i = 0; i < k; ++i) {
    coroots[i][i] = 1;
    for (std::size_t j = 0; j < k; ++j) roots[i][j] = c[i][j];
  }
  return BasedRootDatum(k, roots, coroots, name);
}

/// Semisimple adjoint datum with the given Cartan matrix.
inline BasedRootDatum adjoint_from_cartan(const CartanMatrix& c, const std::string& name) {
  const std::size_t k = c.size();
  std::vector<IntVector> roots(k, IntVector(k)), coroots(k, IntVector(k));
  for (std::size_t i = 0; i < k; ++i) {
    roots[i][i] = 1;
    for (std::size_t j = 0; j < k; ++j) coroots[j][i] = c[i][j];
  }
  return BasedRootDatum(k, roots, coroots, name);
}

/// Adjoint group of the semisimple part.
inline BasedRootDatum adjoint_quotient(const BasedRootDatum& d) {
  if (d.semisimple_rank() == 0) throw domain_error("adjoint quotient of a torus is trivial");
  return adjoint_from_cartan(d.cartan(), d.name() + " adjoint");
}

inline BasedRootDatum simply_connected_cover(const BasedRootDatum& d) {
  if (d.semisimple_rank() == 0) throw domain_error("a torus has no simply connected cover");
  return simply_connected_from_cartan(d.cartan(), d.name() + " sc");
}

inline BasedRootDatum direct_sum(const BasedRootDatum& a, const BasedRootDatum& b) {
  const std::size_t r = a.rank() + b.rank();
  auto embed = [r](const IntVector& v, std::size_t offset) {
    IntVector w(r);
    for (std::size_t i = 0; i < v.size(); ++i) w[offset + i] = v[i];
    return w;
  };
  std::vector<IntVector> roots, coroots;
  for (const auto& v : a.simple_roots()) roots.push_back(embed(v, 0));
  for (const auto& v : b.simple_roots()) roots.push_back(embed(v, a.rank()));
  for (const auto& v : a.simple_coroots()) coroots.push_back(embed(v, 0));
  for (const auto& v : b.simple_coroots()) coroots.push_back(embed(v, a.rank()));
  return BasedRootDatum(r, roots, coroots, a.name() + "x" + b.name());
}

/// Image of the lattices under a unimodular change of basis g of X (X_* transforms by g^{-T}).
inline BasedRootDatum change_basis(const BasedRootDatum& d, const IntMatrix& g, const IntMatrix& g_inverse_transpose) {
  std::vector<IntVector> roots, coroots;
  for (const auto& v : d.simple_roots()) roots.push_back(g * v);
  for (const auto& v : d.simple_coroots()) coroots.push_back(g_inverse_transpose * v);
  return BasedRootDatum(d.rank(), roots, coroots, d.name());
}

// ---------------------------------------------------------------------------
// roots

struct Root {
  std::vector<long long> coefficients;         // in the simple roots
  std::vector<long long> coroot_coefficients;  // in the simple coroots
  IntVector vector;
  IntVector coroot;

  long long height() const {
    long long h = 0;
    for (auto c : coefficients) h += c;
    return h;
  }

  bool supported_on(const std::vector<std::size_t>& subset) const {
    for (std::size_t i = 0; i < coefficients.size(); ++i)
      if (coefficients[i] != 0 && std::find(subset.begin(), subset.end(), i) == subset.end()) return false;
    return true;
  }
};

/// Positive roots ordered by height, then lexicographically by coefficients.
inline std::vector<Root> positive_roots(const BasedRootDatum& d) {
  const std::size_t k = d.semisimple_rank();
  const CartanMatrix& c = d.cartan();
  using Key = std::vector<long long>;
  std::map<Key, Key> found;  // root coefficients -> coroot coefficients
  std::vector<std::pair<Key, Key>> queue;
  for (std::size_t i = 0; i < k; ++i) {
    Key e(k, 0);
    e[i] = 1;
    found[e] = e;
    queue.emplace_back(e, e);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [rc, cc] = queue[head];
    for (std::size_t j = 0; j < k; ++j) {
      long long pair_root = 0, pair_coroot = 0;
      for (std::size_t i = 0; i < k; ++i) {
        pair_root += rc[i] * c[i][j];    // <beta, alpha_j^vee>
        pair_coroot += c[j][i] * cc[i];  // <alpha_j, beta^vee>
      }
      Key r2 = rc, c2 = cc;
      r2[j] -= pair_root;
      c2[j] -= pair_coroot;
      if (!found.count(r2)) {
        found[r2] = c2;
        queue.emplace_back(r2, c2);
      }
    }
    if (queue.size() > 100000) throw std::logic_error("root enumeration did not terminate");
  }
  std::vector<Root> out;
  for (const auto& [rc, cc] : found) {
    if (std::any_of(rc.begin(), rc.end(), [](long long x) { return x < 0; })) continue;
    Root r;
    r.coefficients = rc;
    r.coroot_coefficients = cc;
    r.vector.assign(d.rank(), 0);
    r.coroot.assign(d.rank(), 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t t = 0; t < d.rank(); ++t) {
        r.vector[t] += rc[i] * d.simple_roots()[i][t];
        r.coroot[t] += cc[i] * d.simple_coroots()[i][t];
      }
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coefficients < b.coefficients;
  });
  return out;
}

// ---------------------------------------------------------------------------
// catalog

namespace detail {

inline IntVector unit(std::size_t r, std::size_t i, long long v = 1) {
  IntVector e(r);
  e[i] = v;
  return e;
}

inline IntVector difference(std::size_t r, std::size_t i, std::size_t j) {
  IntVector e(r);
  e[i] = 1;
  e[j] = -1;
  return e;
}

// chain e_i - e_{i+1}, i = 0..n-2, in a lattice of rank r
inline std::vector<IntVector> type_a_chain(std::size_t r, std::size_t n) {
  std::vector<IntVector> v;
  for (std::size_t i = 0; i + 1 < n; ++i) v.push_back(difference(r, i, i + 1));
  return v;
}

}  // namespace detail

struct CatalogTag {
  std::string name;
  bool parametric;
};

inline const std::vector<CatalogTag>& catalog_tags() {
  static const std::vector<CatalogTag> tags = {
      {"GL", true},    {"SL", true},    {"PGL", true},   {"Sp", true},    {"GSp", true},   {"PSp", true},
      {"SO", true},    {"PSO", true},   {"Spin", true},  {"GSpin", true}, {"E6sc", false}, {"E6ad", false},
      {"E7sc", false}, {"E7ad", false}, {"E8", false},   {"F4", false},   {"G2", false},
  };
  return tags;
}

inline std::string known_tags_list() {
  std::string s;
  for (const auto& t : catalog_tags()) s += (s.empty() ? "" : ", ") + t.name + (t.parametric ? "(n)" : "");
  return s;
}

/// Constructors for the split groups of the catalog. Parametric tags take the
/// size of the defining matrix: Sp(2n), SO(2n+1), GSpin(2n), ...
inline BasedRootDatum build_catalog_group(const std::string& tag, const std::vector<long long>& parameters) {
  using detail::difference;
  using detail::type_a_chain;
  using detail::unit;
  const CatalogTag* entry = nullptr;
  for (const auto& t : catalog_tags())
    if (t.name == tag) entry = &t;
  if (!entry) throw input_error("unknown group tag '" + tag + "'; known tags: " + known_tags_list());
  if (entry->parametric != (parameters.size() == 1))
    throw input_error(entry->parametric ? tag + " needs one size parameter" : tag + " takes no parameter");

  if (!entry->parametric) {
    if (tag == "E6sc") return simply_connected_from_cartan(standard_cartan('E', 6), tag);
    if (tag == "E6ad") return adjoint_from_cartan(standard_cartan('E', 6), tag);
    if (tag == "E7sc") return simply_connected_from_cartan(standard_cartan('E', 7), tag);
    if (tag == "E7ad") return adjoint_from_cartan(standard_cartan('E', 7), tag);
    if (tag == "E8") return simply_connected_from_cartan(standard_cartan('E', 8), tag);
    if (tag == "F4") return simply_connected_from_cartan(standard_cartan('F', 4), tag);
    return simply_connected_from_cartan(standard_cartan('G', 2), tag);
  }

  const long long size = parameters.front();
  const std::string name = tag + "(" + std::to_string(size) + ")";
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) throw input_error("invalid parameter for " + name + ": " + what);
  };

  if (tag == "GL") {
    require(size >= 1, "n >= 1");
    auto n = static_cast<std::size_t>(size);
    auto chain = type_a_chain(n, n);
    return BasedRootDatum(n, chain, chain, name);
  }
  if (tag == "SL" || tag == "PGL") {
    require(size >= 2, "n >= 2");
    auto c = standard_cartan('A', static_cast<std::size_t>(size - 1));
    return tag == "SL" ? simply_connected_from_cartan(c, name) : adjoint_from_cartan(c, name);
  }
  if (tag == "Sp" || tag == "GSp" || tag == "PSp") {
    require(size >= 2 && size % 2 == 0, "even size >= 2");
    auto n = static_cast<std::size_t>(size / 2);
    if (tag == "PSp") {
      if (n == 1) return adjoint_from_cartan(standard_cartan('A', 1), name);
      return adjoint_from_cartan(standard_cartan('C', n), name);
    }
    const std::size_t r = tag == "Sp" ? n : n + 1;
    auto roots = type_a_chain(r, n);
    auto coroots = roots;
    IntVector last = unit(r, n - 1, 2);
    if (tag == "GSp") last[n] = -1;  // similitude character e_0 is the last coordinate
    roots.push_back(last);
    coroots.push_back(unit(r, n - 1));
    return BasedRootDatum(r, roots, coroots, name);
  }
  if (tag == "SO" || tag == "Spin" || tag == "GSpin" || tag == "PSO") {
    require(size >= 3, "size >= 3");
    const bool odd = size % 2 == 1;
    const auto n = static_cast<std::size_t>(size / 2);
    const std::size_t r = tag == "GSpin" ? n + 1 : n;
    std::vector<IntVector> roots, coroots;
    if (odd) {
      roots = type_a_chain(r, n);
      coroots = roots;
      roots.push_back(unit(r, n - 1));
      IntVector cor = unit(r, n - 1, 2);
      if (tag == "GSpin") cor[n] = -1;
      coroots.push_back(cor);
    } else {
      roots = type_a_chain(r, n);
      IntVector last(r);
      last[n - 2] = 1;
      last[n - 1] = 1;
      roots.push_back(last);
      coroots = roots;
      if (tag == "GSpin") coroots.back()[n] = -1;
    }
    BasedRootDatum so(r, roots, coroots, name);
    if (tag == "Spin") return simply_connected_from_cartan(so.cartan(), name);
    if (tag == "PSO") return adjoint_from_cartan(so.cartan(), name);
    return so;
  }
  throw input_error("unknown group tag '" + tag + "'");
}

}  // namespace jlt
