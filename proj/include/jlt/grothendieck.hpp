#pragma once

// Grothendieck groups of GL_n(F) and GL_m(D_d) on the basis of parabolically
// induced discrete-series representations, and the transfer LJ between them.
//
// A basis element is a composition (n_1, ..., n_k) naming the standard Levi
// GL_{n_1} x ... x GL_{n_k} plus one opaque discrete-series tag per block.
// Compositions are compared as ordered tuples, not up to Weyl conjugacy.

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jlt/error.hpp"
#include "jlt/lattice.hpp"

namespace jlt {

/// The group GL_m(D_d) with n = m d; d = 1 is the split group GL_n(F).
struct GroupSide {
  long long m = 1;
  long long d = 1;

  long long n() const { return m * d; }
  bool split() const { return d == 1; }
  bool operator==(const GroupSide& o) const { return m == o.m && d == o.d; }
  std::string str() const {
    return "GL_" + std::to_string(m) + (d == 1 ? "(F)" : "(D_" + std::to_string(d) + ")");
  }
};

struct BasisElement {
  std::vector<long long> composition;
  std::vector<std::string> labels;

  auto operator<=>(const BasisElement&) const = default;
  bool operator==(const BasisElement&) const = default;

  long long total() const {
    long long s = 0;
    for (auto x : composition) s += x;
    return s;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < composition.size(); ++i) s += (i ? "," : "") + std::to_string(composition[i]);
    s += "):";
    for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + labels[i];
    return s;
  }
};

class VirtualElement {
 public:
  VirtualElement() = default;
  explicit VirtualElement(GroupSide side) : side_(side) {}

  const GroupSide& side() const { return side_; }
  const std::map<BasisElement, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * b; zero coefficients are never stored.
  void add(const BasisElement& b, const Int& c) {
    if (b.composition.empty() || b.composition.size() != b.labels.size())
      throw input_error("basis element " + b.str() + " needs one tag per block");
    for (auto x : b.composition)
      if (x < 1) throw input_error("composition parts must be positive in " + b.str());
    if (b.total() != side_.m)
      throw input_error("composition " + b.str() + " does not sum to " + std::to_string(side_.m));
    if (c == 0) return;
    Int& slot = terms_[b];
    slot += c;
    if (slot == 0) terms_.erase(b);
  }

  VirtualElement& operator+=(const VirtualElement& o) {
    require_same_side(o);
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  VirtualElement operator+(const VirtualElement& o) const {
    VirtualElement r = *this;
    return r += o;
  }
  VirtualElement operator-() const { return scaled(-1); }
  VirtualElement operator-(const VirtualElement& o) const { return *this + (-o); }

  VirtualElement scaled(const Int& k) const {
    VirtualElement r(side_);
    if (k == 0) return r;
    for (const auto& [b, c] : terms_) r.terms_[b] = c * k;
    return r;
  }

  bool operator==(const VirtualElement& o) const { return side_ == o.side_ && terms_ == o.terms_; }

  /// Same grammar the parser reads: "3*(2,4):a,b - (6):c", or "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [b, c] : terms_) {
      const bool neg = c < 0;
      const Int mag = neg ? Int(-c) : c;
      if (first) s += neg ? "-" : "";
      else s += neg ? " - " : " + ";
      if (mag != 1) s += mag.str() + "*";
      s += b.str();
      first = false;
    }
    return s;
  }

 private:
  void require_same_side(const VirtualElement& o) const {
    if (!(side_ == o.side_)) throw input_error("cannot add elements of " + side_.str() + " and " + o.side_.str());
  }

  GroupSide side_;
  std::map<BasisElement, Int> terms_;
};

/// (n_1/d, ..., n_k/d) when d divides every part.
inline std::optional<std::vector<long long>> levi_transfers(const std::vector<long long>& composition, long long d) {
  if (d < 1) throw input_error("d must be positive");
  long long n = 0;
  for (auto x : composition) n += x;
  if (n % d != 0) throw domain_error(std::to_string(d) + " does not divide " + std::to_string(n));
  std::vector<long long> out;
  for (auto x : composition) {
    if (x % d != 0) return std::nullopt;
    out.push_back(x / d);
  }
  return out;
}

using LabelTransfer = std::function<std::string(const std::string&)>;

/// Appends a prime: St -> St'.
inline std::string default_label_transfer(const std::string& tag) { return tag + "'"; }

/// Inverse of default_label_transfer.
inline std::string default_label_inverse(const std::string& tag) {
  if (tag.empty() || tag.back() != '\'') throw input_error("tag " + tag + " is not a transferred tag");
  return tag.substr(0, tag.size() - 1);
}

inline VirtualElement lj_map(const VirtualElement& x, long long d, const LabelTransfer& transfer = default_label_transfer) {
  if (!x.side().split()) throw input_error("LJ starts from the split group");
  const long long n = x.side().m;
  if (d < 1 || n % d != 0) throw domain_error("no inner form of GL_" + std::to_string(n) + " with division degree " + std::to_string(d));
  VirtualElement out(GroupSide{n / d, d});
  for (const auto& [b, c] : x.terms()) {
    auto comp = levi_transfers(b.composition, d);
    if (!comp) continue;
    BasisElement image{*comp, {}};
    for (const auto& t : b.labels) image.labels.push_back(transfer(t));
    out.add(image, c);
  }
  return out;
}

/// An element of the split group whose image under lj_map is y.
inline VirtualElement lj_preimage(const VirtualElement& y, const LabelTransfer& inverse = default_label_inverse) {
  const GroupSide& s = y.side();
  VirtualElement out(GroupSide{s.n(), 1});
  for (const auto& [b, c] : y.terms()) {
    BasisElement pre;
    for (auto x : b.composition) pre.composition.push_back(x * s.d);
    for (const auto& t : b.labels) pre.labels.push_back(inverse(t));
    out.add(pre, c);
  }
  return out;
}

/// (-1)^(n-m), the sign relating characters on matching elements.
inline int character_sign(long long n, long long m) {
  if (n < 1 || m < 1 || n % m != 0) throw input_error("m must be a positive divisor of n");
  return (n - m) % 2 == 0 ? 1 : -1;
}

inline bool is_d_compatible(const VirtualElement& x, long long d) { return !lj_map(x, d).is_zero(); }

/// Conjunction of local d_v-compatibility over the places with d_v > 1.
inline bool global_d_compatibility(const std::map<std::string, long long>& degrees,
                                   const std::map<std::string, VirtualElement>& elements) {
  for (const auto& [place, d] : degrees) {
    if (d <= 1) continue;
    auto it = elements.find(place);
    if (it == elements.end()) throw input_error("no local component at non-split place " + place);
    if (!is_d_compatible(it->second, d)) return false;
  }
  return true;
}

/// The trivial representation of GL_2(F): i(delta^{-1/2}) minus Steinberg.
inline VirtualElement gl2_trivial() {
  VirtualElement x(GroupSide{2, 1});
  x.add({{1, 1}, {"delta1", "delta2"}}, 1);
  x.add({{2}, {"St"}}, -1);
  return x;
}

namespace detail {

class VirtualParser {
 public:
  VirtualParser(const std::string& text, GroupSide side) : s_(text), side_(side) {}

  VirtualElement parse() {
    VirtualElement out(side_);
    skip();
    if (pos_ == s_.size()) throw input_error("empty element", pos_);
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        throw input_error("expected '+' or '-'", pos_);
      }
      term(out, sign);
      first = false;
    }
    return out;
  }

 private:
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Int integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw input_error("expected a number", start);
    if (pos_ - start > 18) throw input_error("number too large", start);
    return Int(s_.substr(start, pos_ - start));
  }

  static bool tag_char(unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '\'' || c == '^' || c == '.' || c == '/' || c >= 0x80;
  }

  std::string tag() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && tag_char(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw input_error("expected a tag", start);
    return s_.substr(start, pos_ - start);
  }

  void term(VirtualElement& out, int sign) {
    Int coeff = 1;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      coeff = integer();
      skip();
      if (peek('*')) {
        ++pos_;
        skip();
      } else if (!peek('(') && !peek('t')) {
        if (coeff == 0 && pos_ == s_.size() && start == first_token()) return;
        throw input_error("expected '*' or a basis element after the coefficient", pos_);
      }
    }
    coeff *= sign;
    if (s_.compare(pos_, 4, "triv") == 0) {
      const std::size_t start = pos_;
      pos_ += 4;
      if (!(side_ == GroupSide{2, 1})) throw input_error("'triv' is only expanded for GL_2(F)", start);
      out += gl2_trivial().scaled(coeff);
      return;
    }
    const std::size_t start = pos_;
    if (!peek('(')) throw input_error("expected '('", pos_);
    ++pos_;
    BasisElement b;
    while (true) {
      skip();
      Int part = integer();
      b.composition.push_back(static_cast<long long>(part));
      skip();
      if (peek(',')) {
        ++pos_;
        continue;
      }
      if (peek(')')) {
        ++pos_;
        break;
      }
      throw input_error("expected ',' or ')'", pos_);
    }
    skip();
    if (!peek(':')) throw input_error("expected ':' and tags after the composition", pos_);
    ++pos_;
    while (true) {
      skip();
      b.labels.push_back(tag());
      skip();
      if (!peek(',')) break;
      ++pos_;
    }
    try {
      out.add(b, coeff);
    } catch (const input_error& e) {
      throw input_error(e.what(), start);
    }
  }

  std::size_t first_token() const {
    std::size_t i = 0;
    while (i < s_.size() && std::isspace(static_cast<unsigned char>(s_[i]))) ++i;
    return i;
  }

  const std::string& s_;
  GroupSide side_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar: term (('+' | '-') term)*, term = [INT ['*']] ( '(' INT (',' INT)* ')' ':' TAG (',' TAG)* | 'triv' ),
/// or the single literal "0".
inline VirtualElement parse_virtual(const std::string& text, GroupSide side) {
  if (side.m < 1 || side.d < 1) throw input_error("group sizes must be positive");
  return detail::VirtualParser(text, side).parse();
}

}  // namespace jlt
