#pragma once

// Q/Z as reduced fractions with representative in [0, 1).

#include <boost/rational.hpp>
#include <charconv>
#include <string>
#include <string_view>

#include "jlt/error.hpp"

namespace jlt {

class QmodZ {
 public:
  QmodZ() = default;
  QmodZ(long long num, long long den) : value_(normalize(num, den)) {}

  long long numerator() const { return value_.numerator(); }
  long long denominator() const { return value_.denominator(); }
  bool is_zero() const { return value_.numerator() == 0; }

  /// Order of the element in Q/Z.
  long long order() const { return value_.denominator(); }

  QmodZ operator+(const QmodZ& o) const {
    auto s = value_ + o.value_;
    return QmodZ(s.numerator(), s.denominator());
  }
  QmodZ operator-() const { return QmodZ(-value_.numerator(), value_.denominator()); }
  QmodZ operator-(const QmodZ& o) const { return *this + (-o); }
  QmodZ& operator+=(const QmodZ& o) { return *this = *this + o; }
  QmodZ times(long long k) const { return QmodZ(value_.numerator() * k, value_.denominator()); }

  bool operator==(const QmodZ& o) const { return value_ == o.value_; }
  bool operator<(const QmodZ& o) const { return value_ < o.value_; }

  std::string str() const {
    if (is_zero()) return "0";
    return std::to_string(numerator()) + "/" + std::to_string(denominator());
  }

  /// Accepts "a/b", "a" and negative numerators; reduces mod 1.
  static QmodZ parse(std::string_view text) {
    auto read = [&](std::string_view part) {
      long long v = 0;
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
      if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
        throw input_error("bad fraction '" + std::string(text) + "'");
      return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return QmodZ(read(text), 1);
    long long den = read(text.substr(slash + 1));
    if (den <= 0) throw input_error("bad fraction '" + std::string(text) + "'");
    return QmodZ(read(text.substr(0, slash)), den);
  }

 private:
  static boost::rational<long long> normalize(long long num, long long den) {
    if (den == 0) throw input_error("zero denominator");
    if (den < 0) num = -num, den = -den;
    long long r = num % den;
    if (r < 0) r += den;
    return boost::rational<long long>(r, den);
  }

  boost::rational<long long> value_{0};
};

}  // namespace jlt
