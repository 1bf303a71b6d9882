#pragma once

// Kottwitz group A(G) of a split group and the inner forms of GL_n.

#include <numeric>
#include <string>
#include <vector>

#include "jlt/abelian.hpp"
#include "jlt/error.hpp"
#include "jlt/rootdata.hpp"

namespace jlt {

/// A(G) = pi_0(Z(G^))^D for split G. The character group of Z(G^) is
/// X^*(T^) / Z Phi^, read on the dual datum; pi_0 keeps its torsion.
inline FiniteAbelianGroup kottwitz_group(const BasedRootDatum& d) { return center_character_group(dual(d)); }

/// Z(G^) has a positive-dimensional identity component and A(G) only sees
/// its component group.
inline bool kottwitz_dual_center_is_disconnected_torus(const BasedRootDatum& d) { return !d.is_semisimple(); }

/// |A(G^ad)|, the number of inner-form classes of a split group.
inline Int ad_quotient_order(const BasedRootDatum& d) {
  if (d.semisimple_rank() == 0) return 1;
  return kottwitz_group(adjoint_quotient(d)).order();
}

struct InnerFormClass {
  long long j = 0;        // residue mod n, the Hasse invariant j/n
  long long n = 1;
  long long d = 1;        // n / gcd(j, n): the division-algebra degree
  long long j_reduced = 0;  // j/n = j_reduced/d, gcd(j_reduced, d) = 1

  long long m() const { return n / d; }

  /// "GL_2(D_2)"; the split class is "GL_n(F)".
  std::string description() const {
    return "GL_" + std::to_string(m()) + (d == 1 ? "(F)" : "(D_" + std::to_string(d) + ")");
  }
};

inline std::vector<InnerFormClass> inner_form_classes_gl(long long n) {
  if (n < 1) throw input_error("n must be positive");
  if (n > 100000) throw input_error("n too large");
  std::vector<InnerFormClass> out;
  for (long long j = 0; j < n; ++j) {
    long long g = std::gcd(j, n);
    out.push_back({j, n, n / g, j / g});
  }
  return out;
}

}  // namespace jlt
