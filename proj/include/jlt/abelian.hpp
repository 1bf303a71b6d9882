#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "jlt/lattice.hpp"

namespace jlt {

/// Finite abelian group in invariant-factor form d_1 | d_2 | ... | d_k, all d_i >= 2.
class FiniteAbelianGroup {
public:
  FiniteAbelianGroup() = default;

  /// Normalizes an arbitrary list of cyclic orders (zeros are rejected, ones dropped).
  static FiniteAbelianGroup from_cyclic_orders(const std::vector<Int>& orders) {
    for (const auto& o : orders)
      if (o <= 0) throw std::invalid_argument("cyclic order must be positive");
    IntMatrix diag(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = orders[i];
    FiniteAbelianGroup g;
    for (const Int& d : smith_normal_form(diag).invariants())
      if (d > 1) g.factors_.push_back(d);
    return g;
  }

  const std::vector<Int>& invariant_factors() const { return factors_; }

  Int order() const {
    Int o = 1;
    for (const auto& d : factors_) o *= d;
    return o;
  }

  bool is_trivial() const { return factors_.empty(); }

  std::string str() const {
    if (factors_.empty()) return "trivial";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? " x " : "") << "Z/" << factors_[i];
    return os.str();
  }

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) { return a.factors_ == b.factors_; }

private:
  std::vector<Int> factors_;
};

}  // namespace jlt
