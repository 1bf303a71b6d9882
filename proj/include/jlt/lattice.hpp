#pragma once

// Exact integer linear algebra: matrices over Z, Smith normal form, integer
// kernels and solutions, lattice quotients.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace jlt {

using Int = boost::multiprecision::cpp_int;
using IntVector = std::vector<Int>;

inline Int abs_value(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_of(const Int& a, const Int& b) { return boost::multiprecision::gcd(abs_value(a), abs_value(b)); }

inline long long to_int64(const Int& x) {
  if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + x.str());
  return x.convert_to<long long>();
}

inline IntVector int_vector(std::initializer_list<long long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long long x : values) v.emplace_back(x);
  return v;
}

inline Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

/// gcd of the absolute values of the entries; 0 for the zero vector.
inline Int content(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd_of(g, x);
  return g;
}

inline std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

/// Dense row-major integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Rows given as vectors; `cols` is needed when `rows` is empty.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged input");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
    return from_rows(columns, rows).transpose();
  }

  static IntMatrix from_nested(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<IntVector> r;
    for (auto row : rows) r.push_back(int_vector(row));
    return from_rows(r, r.empty() ? 0 : r.front().size());
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  IntVector column(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Int& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
      }
    return c;
  }

  friend IntVector operator*(const IntMatrix& a, const IntVector& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    IntVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const Int& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const Int& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) os << (i ? "; " : "") << to_string(row(i));
    os << ']';
    return os.str();
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// left * input * right == diagonal, left/right unimodular, diagonal entries
/// d_0 | d_1 | ... | d_{rank-1} positive, the rest zero.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  std::size_t rank = 0;

  std::vector<Int> invariants() const {
    std::vector<Int> d;
    for (std::size_t i = 0; i < rank; ++i) d.push_back(diagonal(i, i));
    return d;
  }
};

inline SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  SmithForm sf{IntMatrix::identity(m), input, IntMatrix::identity(n), 0};
  IntMatrix& d = sf.diagonal;
  IntMatrix& u = sf.left;
  IntMatrix& v = sf.right;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d(i, j) != 0 && (!pivot || abs_value(d(i, j)) < abs_value(d(pivot->first, pivot->second))))
            pivot = {i, j};
      if (!pivot) {
        sf.rank = t;
        return sf;
      }
      d.swap_rows(t, pivot->first);
      u.swap_rows(t, pivot->first);
      d.swap_cols(t, pivot->second);
      v.swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        Int q = d(i, t) / d(t, t);
        d.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        Int q = d(t, j) / d(t, t);
        d.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < m && !offending; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            offending = i;
            break;
          }
      if (offending) {
        d.add_row(t, *offending, 1);
        u.add_row(t, *offending, 1);
        continue;
      }
      break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
    sf.rank = t + 1;
  }
  return sf;
}

/// Basis (as columns) of the integer kernel { x in Z^cols : a x = 0 }.
/// The returned lattice is saturated.
inline std::vector<IntVector> integer_kernel(const IntMatrix& a) {
  SmithForm sf = smith_normal_form(a);
  std::vector<IntVector> basis;
  for (std::size_t j = sf.rank; j < a.cols(); ++j) basis.push_back(sf.right.column(j));
  return basis;
}

/// Some integer x with a x = b, if one exists.
inline std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
  SmithForm sf = smith_normal_form(a);
  IntVector c = sf.left * b;
  IntVector y(a.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < sf.rank) {
      const Int& di = sf.diagonal(i, i);
      if (c[i] % di != 0) return std::nullopt;
      y[i] = c[i] / di;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return sf.right * y;
}

/// Structure of Z^ambient / span(generators): torsion invariant factors (> 1)
/// and free rank.
struct LatticeQuotient {
  std::vector<Int> torsion;
  std::size_t free_rank = 0;
};

inline LatticeQuotient lattice_quotient(const std::vector<IntVector>& generators, std::size_t ambient) {
  IntMatrix g = IntMatrix::from_columns(generators, ambient);
  if (generators.empty()) return {{}, ambient};
  SmithForm sf = smith_normal_form(g);
  LatticeQuotient q;
  for (const Int& d : sf.invariants())
    if (d > 1) q.torsion.push_back(d);
  q.free_rank = ambient - sf.rank;
  return q;
}

/// Rank of an integer matrix reduced modulo a prime.
inline std::size_t rank_mod_p(const IntMatrix& a, long long p) {
  std::vector<std::vector<long long>> m(a.rows(), std::vector<long long>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Int r = a(i, j) % p;
      if (r < 0) r += p;
      m[i][j] = r.convert_to<long long>();
    }
  auto inverse = [p](long long x) {
    long long result = 1, base = x % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = static_cast<long long>((__int128)result * base % p);
      base = static_cast<long long>((__int128)base * base % p);
      e >>= 1;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t sel = rank;
    while (sel < a.rows() && m[sel][col] == 0) ++sel;
    if (sel == a.rows()) continue;
    std::swap(m[sel], m[rank]);
    long long inv = inverse(m[rank][col]);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == rank || m[i][col] == 0) continue;
      long long f = static_cast<long long>((__int128)m[i][col] * inv % p);
      for (std::size_t j = col; j < a.cols(); ++j) {
        m[i][j] = static_cast<long long>((m[i][j] - (__int128)f * m[rank][j]) % p);
        if (m[i][j] < 0) m[i][j] += p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace jlt
