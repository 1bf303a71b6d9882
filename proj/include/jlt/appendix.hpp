#pragma once

// The catalog of maximal Levi subgroups and their inner forms for the
// classical and exceptional families, with every stated value recomputed from
// root data.

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "jlt/error.hpp"
#include "jlt/group_expr.hpp"
#include "jlt/kottwitz.hpp"
#include "jlt/levi.hpp"
#include "jlt/satake.hpp"

namespace jlt {

// ---------------------------------------------------------------------------
// small rational expressions in the catalog parameters: "n-2", "(n-1)/2", "m_1 d"

struct Fraction {
  long long num = 0;
  long long den = 1;

  static Fraction make(long long n, long long d) {
    if (d == 0) throw input_error("division by zero in catalog expression");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    return {n / g, d / g};
  }
  bool is_integer() const { return den == 1; }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

  friend Fraction operator+(Fraction a, Fraction b) { return make(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Fraction operator-(Fraction a, Fraction b) { return make(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Fraction operator*(Fraction a, Fraction b) { return make(a.num * b.num, a.den * b.den); }
  friend Fraction operator/(Fraction a, Fraction b) { return make(a.num * b.den, a.den * b.num); }
};

using Bindings = std::map<std::string, long long>;

namespace detail {

class ExprEval {
public:
  ExprEval(const std::string& s, const Bindings& b) : s_(s), b_(b) {}

  Fraction run() {
    Fraction v = expr();
    skip();
    if (pos_ != s_.size()) throw input_error("trailing characters in expression '" + s_ + "'", pos_);
    return v;
  }

private:
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  bool starts_atom() {
    skip();
    return pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(');
  }
  Fraction expr() {
    Fraction v = term();
    while (true) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        char op = s_[pos_++];
        Fraction r = term();
        v = op == '+' ? v + r : v - r;
      } else {
        return v;
      }
    }
  }
  Fraction term() {
    Fraction v = atom();
    while (true) {
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '/')) {
        char op = s_[pos_++];
        Fraction r = atom();
        v = op == '*' ? v * r : v / r;
      } else if (starts_atom()) {
        v = v * atom();  // juxtaposition
      } else {
        return v;
      }
    }
  }
  Fraction atom() {
    skip();
    if (pos_ >= s_.size()) throw input_error("unexpected end of expression '" + s_ + "'", pos_);
    if (s_[pos_] == '(') {
      ++pos_;
      Fraction v = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') throw input_error("expected ')' in '" + s_ + "'", pos_);
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      long long v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = v * 10 + (s_[pos_++] - '0');
      return Fraction::make(v, 1);
    }
    std::string name(1, s_[pos_++]);
    if (pos_ + 1 < s_.size() && s_[pos_] == '_' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      name += s_.substr(pos_, 2);
      pos_ += 2;
    }
    auto it = b_.find(name);
    if (it == b_.end()) throw input_error("unbound variable '" + name + "' in '" + s_ + "'", pos_);
    return Fraction::make(it->second, 1);
  }

  const std::string& s_;
  const Bindings& b_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Fraction evaluate_expression(const std::string& text, const Bindings& b) {
  return detail::ExprEval(text, b).run();
}

/// Rewrites the typeset catalog text into plain ASCII.
inline std::string to_ascii(std::string s) {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"M̃′", "M~'"}, {"M̃", "M~"}, {"′", "'"},  {"≅", "="},     {"↪", "->"}, {"×", "x"},   {"∩", "cap"},
      {"θ", "theta"}, {"α", "a"},   {"Δ", "Delta"}, {"−", "-"},  {"π₁", "pi1"}, {"●", "*"}, {"○", "o"},
      {"—", "-"},     {"⇒", "=>"}, {"⇐", "<="}, {"⇚", "<=="}, {"≠", "!="}, {"·", "*"},
  };
  for (const auto& [from, to] : table) {
    std::size_t p = 0;
    while ((p = s.find(from, p)) != std::string::npos) {
      s.replace(p, from.size(), to);
      p += to.size();
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// stated factors

/// A factor GL_m(D_d) / SL_m(F) / GL_n as written in the catalog, with symbolic subscripts.
struct StatedFactor {
  std::string kind;    // "GL" or "SL"
  std::string m_expr;  // subscript
  std::string d_expr;  // division degree, "1" for F or no field
  std::string text;    // as written
};

inline std::vector<StatedFactor> stated_factors(const std::string& text) {
  static const std::regex factor(R"((GL|SL)_(\{[^}]*\}|[A-Za-z0-9])(\((F|D_(\{[^}]*\}|[A-Za-z0-9]))\))?)");
  auto strip = [](std::string x) {
    if (!x.empty() && x.front() == '{') x = x.substr(1, x.size() - 2);
    return x;
  };
  std::vector<StatedFactor> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), factor); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    StatedFactor f;
    f.kind = m[1];
    f.m_expr = strip(m[2]);
    f.d_expr = m[5].matched ? strip(m[5]) : "1";
    f.text = m[0];
    out.push_back(f);
  }
  return out;
}

/// Stated factor evaluated at the instance parameters.
struct EvaluatedFactor {
  std::string kind;
  Fraction m;
  Fraction d;
  std::string text;  // as written

  bool integral() const { return m.is_integer() && d.is_integer(); }
  Fraction size() const { return m * d; }
  bool central() const { return kind == "GL" && m.num == 1 && m.den == 1 && d.num == 1 && d.den == 1; }

  std::string instance_text(bool inner) const {
    std::string s = kind + "_" + (m.is_integer() ? m.str() : "{" + m.str() + "}");
    if (!inner) return s;
    if (d.is_integer() && d.num == 1) return s + "(F)";
    return s + "(D_" + (d.is_integer() ? d.str() : "{" + d.str() + "}") + ")";
  }
};

inline std::vector<EvaluatedFactor> evaluate_factors(const std::string& text, const Bindings& b) {
  std::vector<EvaluatedFactor> out;
  for (const auto& f : stated_factors(text))
    out.push_back({f.kind, evaluate_expression(f.m_expr, b), evaluate_expression(f.d_expr, b), f.text});
  return out;
}

// ---------------------------------------------------------------------------
// catalog data

enum class LeviForm { equals_envelope, product, sandwich };

inline const char* levi_form_name(LeviForm f) {
  switch (f) {
    case LeviForm::equals_envelope: return "M = M~";
    case LeviForm::product: return "product with SL factors";
    default: return "strict sandwich";
  }
}

struct CatalogVariant {
  std::string label;                // "upper diagram (any n)"; empty when unique
  std::vector<std::size_t> black;   // Bourbaki, 1-based, at the instance
  std::string stated_inner;         // M'(F) statement as written
};

struct CatalogEntry {
  std::string id;                   // "(2)(a)"
  std::string family;               // "B_n"
  std::string group;                // "Spin_{2n+1}"
  std::string instance;             // "Spin(9)"
  Bindings parameters;              // n = 4, ...
  std::string removed_label;        // as written, e.g. "α_{n−1}"
  std::vector<std::size_t> removed; // Bourbaki, 1-based
  std::string stated_levi;          // M statement as written
  std::string stated_envelope;      // factor list of M~ as written
  LeviForm stated_form = LeviForm::sandwich;
  std::vector<CatalogVariant> variants;
};

/// Groups with no inner forms other than the quasi-split one.
struct CatalogRigidEntry {
  std::string id;
  std::string instance;
};

inline const std::vector<CatalogEntry>& catalog_entries() {
  using LF = LeviForm;
  static const std::vector<CatalogEntry> entries = {
      {"(1)(a)", "A_n", "GL_{n+1}", "GL(6)", {{"n", 5}, {"d", 2}, {"m", 2}, {"m_1", 1}, {"m_2", 2}},
       "α_d", {2},
       "M = M_θ = GL_{m_1 d} × GL_{m_2 d} = M̃", "GL_{m_1 d} × GL_{m_2 d}", LF::equals_envelope,
       {{"", {1, 3, 5}, "M′(F) = GL_{m_1}(D_d) × GL_{m_2}(D_d)"}}},
      {"(1)(b)", "A_n", "SL_{n+1}", "SL(6)", {{"n", 5}, {"d", 2}, {"m", 2}, {"m_1", 1}, {"m_2", 2}},
       "α_d", {2},
       "M = M_θ = G ∩ (GL_{m_1 d} × GL_{m_2 d}) ↪ GL_{m_1 d} × GL_{m_2 d} = M̃", "GL_{m_1 d} × GL_{m_2 d}",
       LF::sandwich, {{"", {1, 3, 5}, "M′(F) = G′(F) ∩ (GL_{m_1}(D_d) × GL_{m_2}(D_d))"}}},
      {"(2)(a)", "B_n", "Spin_{2n+1}", "Spin(9)", {{"n", 4}}, "α_{n−1}", {3},
       "M = M_θ ≅ GL_n × SL_2 ↪ M̃ = GL_n × GL_2", "GL_n × GL_2", LF::product,
       {{"", {4}, "M′(F) ≅ GL_n(F) × SL_1(D_2)"}}},
      {"(2)(b)", "B_n", "GSpin_{2n+1}", "GSpin(9)", {{"n", 4}}, "α_{n−1}", {3},
       "M = M_θ ≅ GL_n × GL_2 = M̃", "GL_n × GL_2", LF::equals_envelope,
       {{"", {4}, "M′(F) ≅ GL_n(F) × GL_1(D_2)"}}},
      {"(3)(a)", "C_n, n even", "Sp_{2n}", "Sp(8)", {{"n", 4}}, "α_n", {4},
       "M = M_θ ≅ GL_n = M̃ (Siegel Levi)", "GL_n", LF::equals_envelope,
       {{"", {1, 3}, "M′(F) ≅ GL_{n/2}(D_2)"}}},
      {"(3)(b)", "C_n, n even", "GSp_{2n}", "GSp(8)", {{"n", 4}}, "α_n", {4},
       "M = M_θ ≅ GL_n × GL_1 = M̃", "GL_n × GL_1", LF::equals_envelope,
       {{"", {1, 3}, "M′(F) ≅ GL_{n/2}(D_2) × GL_1(F)"}}},
      {"(3)(c)", "C_n, n odd", "Sp_{2n}", "Sp(10)", {{"n", 5}}, "α_{n−1}", {4},
       "M = M_θ ≅ GL_{n−1} × SL_2 ↪ GL_{n−1} × GL_2 = M̃", "GL_{n-1} × GL_2", LF::product,
       {{"", {1, 3, 5}, "M′(F) ≅ GL_{(n-1)/2}(D_2) × SL_1(D_2)"}}},
      {"(3)(d)", "C_n, n odd", "GSp_{2n}", "GSp(10)", {{"n", 5}}, "α_{n−1}", {4},
       "M = M_θ ≅ GL_n × GL_2 = M̃", "GL_n × GL_2", LF::equals_envelope,
       {{"", {1, 3, 5}, "M′(F) ≅ GL_{(n-1)/2}(D_2) × GL_1(D_2)"}}},
      {"(4)(a)", "D_n-1, n even", "Spin_{2n}", "Spin(8)", {{"n", 4}}, "α_n", {4},
       "M_der = SL_n ↪ M = M_θ ↪ GL_1 × GL_n = M̃", "GL_1 × GL_n", LF::sandwich,
       {{"", {1, 3}, "M′(F) ↪ GL_1(F) × GL_{n/2}(D_2) = M̃′(F)"}}},
      {"(4)(b)", "D_n-1, n even", "GSpin_{2n}", "GSpin(8)", {{"n", 4}}, "α_n", {4},
       "M = M_θ ≅ GL_1 × GL_n = M̃", "GL_1 × GL_n", LF::equals_envelope,
       {{"", {1, 3}, "M′(F) ≅ GL_1 × GL_{n/2}(D_2)"}}},
      {"(4)(c)", "D_n-1, n even", "SO_{2n}", "SO(8)", {{"n", 4}}, "α_n", {4},
       "M = M_θ ≅ GL_n = M̃ (Siegel Levi)", "GL_n", LF::equals_envelope,
       {{"", {1, 3}, "M′(F) ≅ GL_{n/2}(D_2)"}}},
      {"(4)(d)", "D_n-2", "Spin_{2n}", "Spin(12)", {{"n", 6}}, "α_{n−2}", {4},
       "M_der ≅ SL_{n−2} × SL_2 × SL_2 ↪ M = M_θ ↪ GL_1 × GL_{n−2} × GL_2 × GL_2 = M̃",
       "GL_1 × GL_{n-2} × GL_2 × GL_2", LF::sandwich,
       {{"upper diagram (any n)", {5, 6}, "M′(F) ↪ GL_1(F) × GL_{n-2}(F) × GL_1(D_2) × GL_1(D_2) = M̃′(F)"},
        {"lower diagram (n even)", {1, 3, 5}, "M′(F) ↪ GL_1(F) × GL_{n-2}(F) × GL_1(D_2) × GL_2(F) = M̃′(F)"}}},
      {"(4)(e)", "D_n-2", "GSpin_{2n}", "GSpin(12)", {{"n", 6}}, "α_{n−2}", {4},
       "M = M_θ ≅ GL_{n−2} × GL_2 × GL_2 = M̃", "GL_{n-2} × GL_2 × GL_2", LF::equals_envelope,
       {{"upper diagram (any n)", {5, 6}, "M′(F) ≅ GL_1(F) × GL_{n-2}(F) × GL_1(D_2) × GL_1(D_2)"},
        {"lower diagram (n even)", {1, 3, 5}, "M′(F) ≅ GL_1(F) × GL_{n-2}(F) × GL_1(D_2) × GL_2(F)"}}},
      {"(4)(f)", "D_n-3", "Spin_{2n}", "Spin(10)", {{"n", 5}}, "α_{n−3}", {2},
       "M_der ≅ SL_{n−3} × SL_4 ↪ M = M_θ ↪ GL_1 × GL_{n−3} × GL_4 = M̃", "GL_1 × GL_{n-3} × GL_4", LF::sandwich,
       {{"upper diagram (any n)", {4, 5}, "M′(F) ↪ GL_1(F) × GL_{n-3}(F) × GL_2(D_2) = M̃′(F)"},
        {"lower diagram (n odd)", {1, 3, 4, 5}, "M′(F) ↪ GL_1(F) × GL_{(n-3)/2}(D_2) × GL_1(D_4) = M̃′(F)"}}},
      {"(4)(g)", "D_n-3", "GSpin_{2n}", "GSpin(10)", {{"n", 5}}, "α_{n−3}", {2},
       "M = M_θ ≅ GL_{n−2} × GL_4 = M̃", "GL_{n-2} × GL_4", LF::equals_envelope,
       {{"upper diagram (any n)", {4, 5}, "M′(F) ≅ GL_{n-2}(F) × GL_2(D_2)"},
        {"lower diagram (n odd)", {1, 3, 4, 5}, "M′(F) ≅ GL_{(n-2)/2}(D_2) × GL_1(D_4)"}}},
      {"(5)(a)", "E_6", "E_6 simply connected", "E6sc", {}, "α_3 (Bourbaki α_4)", {4},
       "M_der ≅ SL_3 × SL_3 × SL_2 ↪ M = M_θ ↪ GL_1 × GL_3 × GL_3 × GL_2 = M̃", "GL_1 × GL_3 × GL_3 × GL_2",
       LF::sandwich, {{"", {1, 3, 5, 6}, "M′(F) ↪ GL_1 × GL_1(D_3) × GL_1(D_3) × GL_2(F) = M̃′(F)"}}},
      {"(5)(b)", "E_6", "E_6 simply connected", "E6sc", {}, "α_6 (Bourbaki α_2)", {2},
       "M_der ≅ SL_6 ↪ M = M_θ ↪ GL_1 × GL_6 = M̃", "GL_1 × GL_6", LF::sandwich,
       {{"", {1, 3, 5, 6}, "M′(F) ↪ GL_1(F) × GL_2(D_2) = M̃′(F)"}}},
      {"(5)(c)", "E_6", "E_6 simply connected", "E6sc", {}, "α_3, α_6 (Bourbaki α_4, α_2)", {2, 4},
       "M_der ≅ SL_3 × SL_3 ↪ M = M_θ ↪ GL_1 × GL_3 × GL_3 = M̃", "GL_1 × GL_3 × GL_3", LF::sandwich,
       {{"", {1, 3, 5, 6}, "M′(F) ↪ GL_1(F) × GL_1(D_3) × GL_1(D_3) = M̃′(F)"}}},
      {"(6)(a)", "E_7", "E_7 simply connected", "E7sc", {}, "α_4 (Bourbaki α_4)", {4},
       "M_der ≅ SL_2 × SL_3 × SL_4 ↪ M = M_θ ↪ GL_1 × GL_2 × GL_3 × GL_4 = M̃", "GL_1 × GL_2 × GL_3 × GL_4",
       LF::sandwich, {{"", {2, 5, 7}, "M′(F) ↪ GL_1(F) × GL_1(D_2) × GL_3(F) × GL_2(D_2) = M̃′(F)"}}},
      {"(6)(b)", "E_7", "E_7 simply connected", "E7sc", {}, "α_5 (Bourbaki α_3)", {3},
       "M_der ≅ SL_6 × SL_2 ↪ M = M_θ ↪ GL_1 × GL_6 × GL_2 = M̃", "GL_1 × GL_6 × GL_2", LF::sandwich,
       {{"", {2, 5, 7}, "M′(F) ↪ GL_1(F) × GL_3(D_2) × GL_2(F) = M̃′(F)"}}},
  };
  return entries;
}

inline const std::vector<CatalogRigidEntry>& catalog_rigid_entries() {
  static const std::vector<CatalogRigidEntry> entries = {{"(7)", "E8"}, {"(7)", "F4"}, {"(7)", "G2"}};
  return entries;
}

// ---------------------------------------------------------------------------
// recomputation

struct CatalogFlag {
  std::string category;  // "arithmetic", "envelope", "structure", "inner form"
  std::string variant;   // empty for entry-level flags
  std::string message;
};

struct VariantResult {
  const CatalogVariant* variant = nullptr;
  std::string diagram;
  std::string diagram_ascii;
  std::vector<std::size_t> degrees;
  InnerFormShape shape;
  std::vector<EvaluatedFactor> stated;
  /// Consistent alternatives for a stated factor whose size does not fit.
  std::vector<std::string> candidates;
  bool consistent = true;
};

struct EntryResult {
  const CatalogEntry* entry = nullptr;
  LeviReport report;
  LeviForm form = LeviForm::sandwich;
  std::vector<EvaluatedFactor> stated_envelope;
  std::vector<VariantResult> variants;
  std::vector<CatalogFlag> flags;
};

struct RigidResult {
  const CatalogRigidEntry* entry = nullptr;
  DynkinType type;
  Int ad_order = 1;
};

struct CatalogReport {
  std::vector<EntryResult> entries;
  std::vector<RigidResult> rigid;

  std::size_t flagged() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.flags.size();
    return n;
  }
};

namespace detail {

inline std::vector<std::size_t> zero_based(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out;
  for (auto x : v) out.push_back(x - 1);
  return out;
}

inline std::string sizes_text(std::vector<long long> sizes) {
  std::sort(sizes.begin(), sizes.end());
  std::vector<std::string> parts;
  for (auto s : sizes) parts.push_back("GL_" + std::to_string(s));
  return parts.empty() ? "1" : join(parts, " × ");
}

struct FactorKey {
  std::string kind;
  long long m;
  long long d;
  friend bool operator<(const FactorKey& a, const FactorKey& b) {
    return std::tie(a.kind, a.m, a.d) < std::tie(b.kind, b.m, b.d);
  }
  friend bool operator==(const FactorKey& a, const FactorKey& b) { return a.kind == b.kind && a.m == b.m && a.d == b.d; }
};

inline std::string key_text(const FactorKey& k) {
  return k.kind + "_" + std::to_string(k.m) + (k.d == 1 ? "(F)" : "(D_" + std::to_string(k.d) + ")");
}

}  // namespace detail

inline EntryResult recompute_entry(const CatalogEntry& e) {
  using detail::FactorKey;
  EntryResult out;
  out.entry = &e;
  BasedRootDatum g = parse_group_expr(e.instance);
  LeviDescriptor desc = LeviDescriptor::removing(g, detail::zero_based(e.removed));
  out.report = analyze_levi(desc);
  if (!out.report.envelope) throw std::logic_error("catalog Levi " + e.id + " fails condition (1)");
  const GlEnvelope& env = *out.report.envelope;
  out.form = env.equals_levi ? LeviForm::equals_envelope : env.product_form ? LeviForm::product : LeviForm::sandwich;

  // envelope
  out.stated_envelope = evaluate_factors(e.stated_envelope, e.parameters);
  std::vector<long long> stated_sizes, ours;
  for (const auto& f : out.stated_envelope) {
    if (!f.integral()) {
      out.flags.push_back({"arithmetic", "", "non-integral factor " + f.text + " at the instance"});
      continue;
    }
    if (!f.central()) stated_sizes.push_back(f.m.num);
  }
  for (const auto& b : env.blocks) ours.push_back(static_cast<long long>(b.size));
  {
    auto a = stated_sizes, b = ours;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      out.flags.push_back({"envelope", "", "stated envelope " + detail::sizes_text(stated_sizes) + ", recomputed " +
                                               detail::sizes_text(ours)});
  }
  if (out.form != e.stated_form)
    out.flags.push_back({"structure", "", std::string("stated form: ") + levi_form_name(e.stated_form) +
                                              "; recomputed form: " + levi_form_name(out.form)});

  for (const auto& v : e.variants) {
    VariantResult vr;
    vr.variant = &v;
    SatakeDiagram diag(g, detail::zero_based(v.black));
    vr.diagram = render_diagram(diag);
    vr.diagram_ascii = render_diagram(diag, TextStyle{true});
    vr.degrees = degrees_from_diagram(desc, out.report, diag.black);
    vr.shape = transfer_levi(out.report, vr.degrees);
    vr.stated = evaluate_factors(v.stated_inner, e.parameters);

    auto flag = [&](const std::string& cat, const std::string& msg) {
      out.flags.push_back({cat, v.label, msg});
      vr.consistent = false;
    };
    std::vector<FactorKey> stated_keys, our_keys;
    std::vector<long long> stated_inner_sizes;
    for (const auto& f : vr.stated) {
      if (!f.integral()) {
        flag("arithmetic", "non-integral factor " + f.text + " = " + f.instance_text(true) + " at the instance");
        continue;
      }
      if (f.central()) continue;
      stated_keys.push_back({f.kind, f.m.num, f.d.num});
      stated_inner_sizes.push_back(f.m.num * f.d.num);
    }
    for (auto f : vr.shape.factors)
      our_keys.push_back({f.kind == BlockKind::sl && vr.shape.exact ? "SL" : "GL", static_cast<long long>(f.m),
                          static_cast<long long>(f.d)});
    // internal consistency: m * d of the inner form against the stated envelope
    {
      auto a = stated_inner_sizes, b = stated_sizes;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (std::all_of(vr.stated.begin(), vr.stated.end(), [](const auto& f) { return f.integral(); }) && a != b)
        flag("arithmetic", "stated inner form has block sizes m·d = " + detail::sizes_text(stated_inner_sizes) +
                               " but the stated envelope is " + detail::sizes_text(stated_sizes));
    }
    // multiset comparison with the diagram
    std::vector<FactorKey> unmatched_stated, unmatched_ours = our_keys;
    for (const auto& k : stated_keys) {
      auto it = std::find(unmatched_ours.begin(), unmatched_ours.end(), k);
      if (it != unmatched_ours.end()) unmatched_ours.erase(it);
      else unmatched_stated.push_back(k);
    }
    const bool integral = std::all_of(vr.stated.begin(), vr.stated.end(), [](const auto& f) { return f.integral(); });
    if (integral && (!unmatched_stated.empty() || !unmatched_ours.empty())) {
      std::vector<std::string> a, b;
      for (const auto& k : unmatched_stated) a.push_back(detail::key_text(k));
      for (const auto& k : unmatched_ours) b.push_back(detail::key_text(k));
      flag("inner form", "stated " + (a.empty() ? std::string("(nothing)") : join(a, " × ")) + " where the diagram gives " +
                             (b.empty() ? std::string("(nothing)") : join(b, " × ")));
      if (unmatched_stated.size() == 1 && unmatched_ours.size() == 1 && unmatched_stated[0].d > 1) {
        const long long n = unmatched_ours[0].m * unmatched_ours[0].d;
        if (unmatched_stated[0].m * unmatched_stated[0].d != n)
          for (long long d = 2; d <= n; ++d)
            if (n % d == 0) vr.candidates.push_back(detail::key_text({unmatched_stated[0].kind, n / d, d}));
      }
    }
    out.variants.push_back(std::move(vr));
  }
  return out;
}

inline CatalogReport appendix_catalog() {
  CatalogReport rep;
  for (const auto& e : catalog_entries()) rep.entries.push_back(recompute_entry(e));
  for (const auto& r : catalog_rigid_entries()) {
    BasedRootDatum g = parse_group_expr(r.instance);
    rep.rigid.push_back({&r, g.type(), ad_quotient_order(g)});
  }
  return rep;
}

}  // namespace jlt
