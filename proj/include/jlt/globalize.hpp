#pragma once

// Local-to-global bookkeeping: primes splitting in quadratic fields, the
// place plan for a tower of quadratic extensions, cocycles over S, and
// global division algebras from local Hasse invariants.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jlt/error.hpp"
#include "jlt/rational.hpp"

namespace jlt {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long long f = 3; f <= n / f; f += 2)
    if (n % f == 0) return false;
  return true;
}

inline long long pow_mod(long long base, long long exp, long long mod) {
  __int128 result = 1, b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<long long>(result);
}

/// q* = (-1)^((q-1)/2) q for an odd prime q.
inline long long q_star(long long q) { return q % 4 == 1 ? q : -q; }

/// Whether p splits completely in Q(sqrt(q*)).
inline bool splits_in(long long p, long long q) {
  const long long qs = q_star(q);
  if (p == 2) return ((qs % 8) + 8) % 8 == 1;
  if (((qs % p) + p) % p == 0) return false;
  return pow_mod(qs, (p - 1) / 2, p) == 1;
}

/// The first `count` odd primes q != p with p split in Q(sqrt(q*)).
inline std::vector<long long> split_primes(long long p, std::size_t count) {
  if (!is_prime(p)) throw input_error(std::to_string(p) + " is not prime");
  if (count == 0) throw input_error("count must be positive");
  std::vector<long long> out;
  for (long long q = 3; out.size() < count; q += 2)
    if (q != p && is_prime(q) && splits_in(p, q)) out.push_back(q);
  return out;
}

enum class PlaceKind { finite, real, complex };

struct PlaceLabel {
  PlaceKind kind = PlaceKind::finite;
  long long prime = 0;   // finite places only
  std::string tag;       // residue degree / tower description
  std::string id;

  bool archimedean() const { return kind != PlaceKind::finite; }
};

inline const char* place_kind_name(PlaceKind k) {
  switch (k) {
    case PlaceKind::finite: return "finite";
    case PlaceKind::real: return "real";
    case PlaceKind::complex: return "complex";
  }
  return "?";
}

/// Smallest r with 2^r >= l.
inline unsigned ceil_log2(long long l) {
  unsigned r = 0;
  while ((1LL << r) < l) ++r;
  return r;
}

struct PlacePlan {
  long long base_prime = 2;
  unsigned r = 0;
  std::vector<long long> tower_primes;
  long long degree = 1;
  std::vector<PlaceLabel> places;
};

inline PlacePlan plan_places(long long p, long long l) {
  if (!is_prime(p)) throw input_error(std::to_string(p) + " is not prime");
  if (l < 1) throw input_error("number of places must be positive");
  if (l > (1LL << 20)) throw input_error("number of places too large");
  PlacePlan plan;
  plan.base_prime = p;
  plan.r = ceil_log2(l);
  if (plan.r > 0) plan.tower_primes = split_primes(p, plan.r);
  plan.degree = 1LL << plan.r;
  std::string field = "Q";
  if (!plan.tower_primes.empty()) {
    field += "(";
    for (std::size_t i = 0; i < plan.tower_primes.size(); ++i)
      field += (i ? "," : "") + std::string("sqrt(") + std::to_string(q_star(plan.tower_primes[i])) + ")";
    field += ")";
  }
  for (long long i = 0; i < l; ++i)
    plan.places.push_back({PlaceKind::finite, p, field + " over " + std::to_string(p) + ", residue degree 1",
                           "v" + std::to_string(i + 1)});
  return plan;
}

struct Cocycle {
  long long order = 1;
  long long cls = 0;
  /// Per place, in the order given: cls/order on S, 0 off S.
  std::vector<QmodZ> assignment;
  QmodZ sum;
  bool valid = false;
};

/// `in_s[i]` marks place i as a member of S.
inline Cocycle build_cocycle(const std::vector<bool>& in_s, long long order, long long cls) {
  if (order < 1) throw input_error("class order must be positive");
  if (((cls % order) + order) % order == 0) throw input_error("class must be nonzero modulo its order");
  if (std::none_of(in_s.begin(), in_s.end(), [](bool b) { return b; })) throw input_error("S must be nonempty");
  Cocycle c;
  c.order = order;
  c.cls = ((cls % order) + order) % order;
  for (bool b : in_s) {
    c.assignment.push_back(b ? QmodZ(c.cls, order) : QmodZ());
    c.sum += c.assignment.back();
  }
  c.valid = c.sum.is_zero();
  return c;
}

struct GlobalizationPlan {
  PlacePlan places;
  long long class_order = 1;
  std::vector<std::size_t> s;  // indices into places.places
  Cocycle cocycle;
};

/// Builds T with l places and takes S as the first places, |S| the largest
/// multiple of the class order not exceeding l.
inline GlobalizationPlan globalization_plan(long long p, long long l, long long class_order, long long cls = 1) {
  if (class_order < 1) throw input_error("class order must be positive");
  GlobalizationPlan g;
  g.places = plan_places(p, l);
  g.class_order = class_order;
  const long long s_size = (l / class_order) * class_order;
  if (s_size == 0)
    throw domain_error("|S| must be a positive multiple of " + std::to_string(class_order) + " but only " +
                       std::to_string(l) + " places were requested");
  std::vector<bool> in_s(static_cast<std::size_t>(l), false);
  for (long long i = 0; i < s_size; ++i) {
    in_s[static_cast<std::size_t>(i)] = true;
    g.s.push_back(static_cast<std::size_t>(i));
  }
  g.cocycle = build_cocycle(in_s, class_order, cls);
  return g;
}

/// Place label -> local invariant. Labels starting with "ooC" are complex,
/// other labels starting with "oo" are real, everything else is finite.
using HasseVector = std::map<std::string, QmodZ>;

inline PlaceKind place_kind_of(const std::string& label) {
  if (label.rfind("ooC", 0) == 0) return PlaceKind::complex;
  if (label.rfind("oo", 0) == 0) return PlaceKind::real;
  return PlaceKind::finite;
}

/// "v1=1/2,v2=1/3"
inline HasseVector parse_hasse_vector(const std::string& text) {
  HasseVector v;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }), item.end());
    if (!item.empty()) {
      auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) throw input_error("expected place=fraction, got '" + item + "'", start);
      std::string label = item.substr(0, eq);
      if (v.count(label)) throw input_error("place " + label + " given twice", start);
      v[label] = QmodZ::parse(item.substr(eq + 1));
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return v;
}

struct LocalAlgebra {
  std::string place;
  PlaceKind kind = PlaceKind::finite;
  QmodZ invariant;
  long long d = 1;
  long long m = 1;
};

struct DivisionAlgebraResult {
  long long n = 1;
  QmodZ sum;
  bool valid = false;
  std::vector<LocalAlgebra> places;
  std::vector<std::string> nonsplit;  // support of the vector
};

inline DivisionAlgebraResult global_division_algebra(long long n, const HasseVector& inv) {
  if (n < 1) throw input_error("n must be positive");
  DivisionAlgebraResult r;
  r.n = n;
  for (const auto& [label, x] : inv) {
    LocalAlgebra a{label, place_kind_of(label), x, x.denominator(), 0};
    if (n % a.d != 0)
      throw domain_error("invariant " + x.str() + " at " + label + " has denominator not dividing " + std::to_string(n));
    if (a.kind == PlaceKind::real && !(x.is_zero() || x == QmodZ(1, 2)))
      throw domain_error("real place " + label + " admits only invariants 0 and 1/2");
    if (a.kind == PlaceKind::complex && !x.is_zero())
      throw domain_error("complex place " + label + " admits only invariant 0");
    a.m = n / a.d;
    r.sum += x;
    if (!x.is_zero()) r.nonsplit.push_back(label);
    r.places.push_back(a);
  }
  r.valid = r.sum.is_zero();
  return r;
}

}  // namespace jlt
