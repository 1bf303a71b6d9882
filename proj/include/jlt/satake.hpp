#pragma once

// Satake diagrams of inner forms, transfer of condition-(1) Levis to
// prod GL_{m_i}(D_{d_i}), and text rendering of diagrams.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jlt/error.hpp"
#include "jlt/levi.hpp"
#include "jlt/rootdata.hpp"

namespace jlt {

/// Typographic choices shared by every text renderer.
struct TextStyle {
  bool ascii = false;

  const char* times() const { return ascii ? " x " : " × "; }
  const char* embeds() const { return ascii ? " -> " : " ↪ "; }
  const char* iso() const { return ascii ? " = " : " ≅ "; }
  const char* black() const { return ascii ? "*" : "●"; }
  const char* white() const { return ascii ? "o" : "○"; }
  const char* single() const { return ascii ? "-" : "—"; }
  const char* double_right() const { return ascii ? "=>" : "⇒"; }
  const char* double_left() const { return ascii ? "<=" : "⇐"; }
  const char* triple_left() const { return ascii ? "<==" : "⇚"; }
  std::string prime(const std::string& s) const { return s + (ascii ? "'" : "′"); }
  std::string tilde(const std::string& s) const { return s + (ascii ? "~" : "̃"); }
};

struct SatakeDiagram {
  BasedRootDatum base;
  std::vector<std::size_t> black;  // sorted simple-root indices

  SatakeDiagram(BasedRootDatum b, std::vector<std::size_t> blk) : base(std::move(b)), black(std::move(blk)) {
    validate_subset(base, black);
    std::sort(black.begin(), black.end());
  }

  bool is_black(std::size_t i) const { return std::binary_search(black.begin(), black.end(), i); }
};

/// Diagram up to isomorphism: per component, its type and colours in Bourbaki order.
struct DiagramComponent {
  char series = 'A';
  std::size_t rank = 0;
  std::vector<bool> black;

  friend bool operator==(const DiagramComponent& a, const DiagramComponent& b) {
    return a.series == b.series && a.rank == b.rank && a.black == b.black;
  }
};
using DiagramShape = std::vector<DiagramComponent>;

inline DiagramShape diagram_shape(const SatakeDiagram& d) {
  DiagramShape s;
  for (const auto& c : d.base.type().components) {
    DiagramComponent dc{c.series, c.rank, {}};
    for (auto node : c.nodes) dc.black.push_back(d.is_black(node));
    s.push_back(dc);
  }
  return s;
}

inline std::string render_shape(const DiagramShape& shape, const TextStyle& st = {}) {
  std::string out;
  for (std::size_t ci = 0; ci < shape.size(); ++ci) {
    const auto& c = shape[ci];
    auto v = [&](std::size_t i) { return std::string(c.black[i] ? st.black() : st.white()); };
    std::string s;
    const std::size_t n = c.rank;
    switch (c.series) {
      case 'A':
        for (std::size_t i = 0; i < n; ++i) s += (i ? st.single() : "") + v(i);
        break;
      case 'B':
      case 'C':
        for (std::size_t i = 0; i + 1 < n; ++i) s += (i ? st.single() : "") + v(i);
        s += std::string(c.series == 'B' ? st.double_right() : st.double_left()) + v(n - 1);
        break;
      case 'D':
        for (std::size_t i = 0; i + 2 < n; ++i) s += (i ? st.single() : "") + v(i);
        s += "<" + v(n - 2) + "," + v(n - 1) + ">";
        break;
      case 'E':
        // chain alpha_1, alpha_3, alpha_4 (alpha_2), alpha_5, ...
        s = v(0) + st.single() + v(2) + st.single() + v(3) + "(" + v(1) + ")";
        for (std::size_t i = 4; i < n; ++i) s += st.single() + v(i);
        break;
      case 'F':
        s = v(0) + st.single() + v(1) + st.double_right() + v(2) + st.single() + v(3);
        break;
      case 'G':
        s = v(0) + st.triple_left() + v(1);
        break;
    }
    out += (ci ? " + " : "") + s;
  }
  return out;
}

inline std::string render_diagram(const SatakeDiagram& d, const TextStyle& st = {}) {
  return render_shape(diagram_shape(d), st);
}

namespace detail {

class DiagramParser {
public:
  explicit DiagramParser(const std::string& s) : s_(s) {}

  DiagramShape parse() {
    DiagramShape out;
    if (s_.empty()) throw input_error("empty diagram", 0);
    while (true) {
      out.push_back(component());
      if (pos_ == s_.size()) break;
      if (!eat(" + ")) throw input_error("expected ' + ' between components", pos_);
    }
    return out;
  }

private:
  enum class Bond { single, dbl_right, dbl_left, triple_left, triple_right };

  bool eat(const std::string& tok) {
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool vertex() {
    for (const char* t : {"●", "*"})
      if (eat(t)) return true;
    for (const char* t : {"○", "o"})
      if (eat(t)) return false;
    throw input_error("expected a vertex", pos_);
  }

  std::optional<Bond> bond() {
    if (eat("⇛") || eat("==>")) return Bond::triple_right;
    if (eat("⇚") || eat("<==")) return Bond::triple_left;
    if (eat("⇒") || eat("=>")) return Bond::dbl_right;
    if (eat("⇐") || eat("<=")) return Bond::dbl_left;
    if (eat("—") || eat("-")) return Bond::single;
    return std::nullopt;
  }

  DiagramComponent component() {
    const std::size_t start = pos_;
    std::vector<bool> chain{vertex()};
    std::vector<Bond> bonds;
    std::optional<bool> pendant;
    std::size_t pendant_after = 0;
    std::optional<std::pair<bool, bool>> fork;
    while (pos_ < s_.size()) {
      if (eat("(")) {
        if (pendant) throw input_error("second pendant vertex", pos_);
        pendant = vertex();
        pendant_after = chain.size();
        if (!eat(")")) throw input_error("expected ')'", pos_);
        continue;
      }
      if (s_.compare(pos_, 1, "<") == 0 && s_.compare(pos_, 2, "<=") != 0) {
        ++pos_;
        bool x = vertex();
        if (!eat(",")) throw input_error("expected ','", pos_);
        bool y = vertex();
        if (!eat(">")) throw input_error("expected '>'", pos_);
        fork = std::make_pair(x, y);
        break;
      }
      auto b = bond();
      if (!b) break;
      bonds.push_back(*b);
      chain.push_back(vertex());
    }
    auto fail = [&](const std::string& why) -> DiagramComponent { throw input_error(why, start); };
    std::size_t multiple = 0;
    for (auto b : bonds)
      if (b != Bond::single) ++multiple;

    if (fork) {
      if (pendant || multiple) return fail("fork with other decorations");
      if (chain.size() < 2) return fail("D diagram needs at least two chain vertices");
      DiagramComponent c{'D', chain.size() + 2, chain};
      c.black.push_back(fork->first);
      c.black.push_back(fork->second);
      return c;
    }
    if (pendant) {
      if (multiple || pendant_after != 3 || chain.size() < 5 || chain.size() > 7)
        return fail("malformed E diagram");
      DiagramComponent c{'E', chain.size() + 1, {}};
      c.black = {chain[0], *pendant, chain[1], chain[2]};
      for (std::size_t i = 3; i < chain.size(); ++i) c.black.push_back(chain[i]);
      return c;
    }
    if (multiple == 0) return {'A', chain.size(), chain};
    if (multiple > 1) return fail("more than one multiple bond");
    const std::size_t n = chain.size();
    if (bonds.back() == Bond::dbl_right) return {'B', n, chain};
    if (bonds.back() == Bond::dbl_left) return {'C', n, chain};
    if (n == 2 && bonds.back() == Bond::triple_left) return {'G', 2, chain};
    if (n == 4 && bonds[1] == Bond::dbl_right) return {'F', 4, chain};
    return fail("unrecognised bond pattern");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline DiagramShape parse_diagram(const std::string& text) { return detail::DiagramParser(text).parse(); }

/// Inner form of GL_n / SL_n with division degree d: white exactly at d, 2d, ...
inline SatakeDiagram type_a_satake(long long n, long long d) {
  if (n < 2) throw input_error("type A diagram needs n >= 2");
  if (d < 1) throw input_error("division degree must be positive");
  if (n % d != 0) throw domain_error("no inner form of GL_" + std::to_string(n) + " with division degree " + std::to_string(d));
  std::vector<std::size_t> black;
  for (long long i = 1; i < n; ++i)
    if (i % d != 0) black.push_back(static_cast<std::size_t>(i - 1));
  return SatakeDiagram(build_catalog_group("SL", {n}), black);
}

struct InnerFormFactor {
  std::size_t m = 1;
  std::size_t d = 1;
  BlockKind kind = BlockKind::gl;

  friend bool operator==(const InnerFormFactor& a, const InnerFormFactor& b) {
    return a.m == b.m && a.d == b.d && a.kind == b.kind;
  }
};

struct InnerFormShape {
  std::vector<InnerFormFactor> factors;
  /// GL_1(F) factors of the (embedding) torus.
  std::size_t central_gl1 = 0;
  /// true: M'(F) is the product; false: M'(F) sits inside the product (sandwich).
  bool exact = true;
  std::string field_note;
};

/// Division degree of each envelope block read off the black vertices.
inline std::vector<std::size_t> degrees_from_diagram(const LeviDescriptor& desc, const LeviReport& report,
                                                     const std::vector<std::size_t>& black) {
  if (!report.envelope) throw domain_error("the Levi does not satisfy condition (1)");
  for (auto r : desc.removed())
    if (std::find(black.begin(), black.end(), r) != black.end())
      throw domain_error("cannot remove the black vertex a" + std::to_string(r + 1));
  std::vector<std::size_t> degrees;
  for (const auto& blk : report.envelope->blocks) {
    const std::size_t n = blk.size;
    std::size_t d = n;
    for (std::size_t p = 0; p < blk.nodes.size(); ++p)
      if (std::find(black.begin(), black.end(), blk.nodes[p]) == black.end()) {
        d = p + 1;
        break;
      }
    bool ok = n % d == 0;
    for (std::size_t p = 0; ok && p < blk.nodes.size(); ++p) {
      bool is_black = std::find(black.begin(), black.end(), blk.nodes[p]) != black.end();
      if (is_black != ((p + 1) % d != 0)) ok = false;
    }
    if (!ok) throw domain_error("black vertices on a GL_" + std::to_string(n) + " block are not a division-algebra pattern");
    degrees.push_back(d);
  }
  return degrees;
}

inline InnerFormShape transfer_levi(const LeviReport& report, const std::vector<std::size_t>& degrees) {
  if (!report.condition_one || !report.envelope) throw domain_error("the Levi does not satisfy condition (1)");
  const auto& env = *report.envelope;
  if (degrees.size() != env.blocks.size())
    throw input_error("expected " + std::to_string(env.blocks.size()) + " division degrees, got " +
                      std::to_string(degrees.size()));
  InnerFormShape shape;
  shape.exact = env.product_form;
  shape.central_gl1 = env.product_form ? env.product_gl1 : env.central_gl1;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const std::size_t n = env.blocks[i].size, d = degrees[i];
    if (d == 0 || n % d != 0)
      throw domain_error("division degree " + std::to_string(d) + " does not divide GL_" + std::to_string(n) +
                         ": the Levi does not transfer to this inner form");
    shape.factors.push_back({n / d, d, env.blocks[i].kind});
  }
  if (shape.central_gl1 == 0) shape.field_note = "no central torus factor";
  else shape.field_note = std::to_string(shape.central_gl1) + " central GL_1(F) factor" + (shape.central_gl1 > 1 ? "s" : "");
  return shape;
}

// ---------------------------------------------------------------------------
// text

inline std::string factor_text(const InnerFormFactor& f, bool inner) {
  std::string g = f.kind == BlockKind::sl ? "SL" : "GL";
  std::string s = g + "_" + std::to_string(f.m);
  if (!inner) return s;
  return s + (f.d == 1 ? "(F)" : "(D_" + std::to_string(f.d) + ")");
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

/// "GL_1(F) × GL_1(D_2) × GL_3(F)"; the GL_1(F) torus factors come first.
inline std::string inner_form_text(const InnerFormShape& s, const TextStyle& st = {}) {
  std::vector<std::string> parts(s.central_gl1, "GL_1(F)");
  for (auto f : s.factors) {
    if (!s.exact) f.kind = BlockKind::gl;
    parts.push_back(factor_text(f, true));
  }
  if (parts.empty()) return "1";
  return join(parts, st.times());
}

/// "M'(F) ≅ ..." or "M'(F) ↪ ...".
inline std::string inner_form_statement(const InnerFormShape& s, const TextStyle& st = {}) {
  return st.prime("M") + "(F)" + (s.exact ? st.iso() : st.embeds()) + inner_form_text(s, st);
}

inline std::string derived_text(const LeviReport& rep, const TextStyle& st = {}) {
  if (!rep.envelope) return rep.derived_type.str();
  std::vector<std::string> parts;
  for (const auto& b : rep.envelope->blocks) parts.push_back("SL_" + std::to_string(b.size));
  return parts.empty() ? "1" : join(parts, st.times());
}

inline std::string envelope_text(const GlEnvelope& env, const TextStyle& st = {}) {
  std::vector<std::string> parts(env.central_gl1, "GL_1");
  for (const auto& b : env.blocks) parts.push_back("GL_" + std::to_string(b.size));
  return parts.empty() ? "1" : join(parts, st.times());
}

/// The structure of M: "GL_3 × SL_2", "GL_4 × GL_1", or the sandwich chain.
inline std::string levi_structure_text(const LeviReport& rep, const TextStyle& st = {}) {
  if (!rep.envelope) return "M_der of type " + rep.derived_type.str() + " (condition (1) fails)";
  const auto& env = *rep.envelope;
  if (env.product_form) {
    std::vector<std::string> parts;
    for (const auto& b : env.blocks) parts.push_back(std::string(b.kind == BlockKind::sl ? "SL_" : "GL_") + std::to_string(b.size));
    for (std::size_t i = 0; i < env.product_gl1; ++i) parts.push_back("GL_1");
    std::string m = "M" + std::string(st.iso()) + (parts.empty() ? "1" : join(parts, st.times()));
    if (env.equals_levi) return m + " = " + st.tilde("M");
    return m + st.embeds() + envelope_text(env, st) + " = " + st.tilde("M");
  }
  return "M_der" + std::string(st.iso()) + derived_text(rep, st) + st.embeds() + "M" + st.embeds() + envelope_text(env, st) +
         " = " + st.tilde("M");
}

}  // namespace jlt
