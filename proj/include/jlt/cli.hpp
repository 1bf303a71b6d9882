#pragma once

// Command dispatch shared by the jlt tool and the tests: a request is a
// subcommand with string options, the result is an exit code and the bytes
// for stdout and stderr.

#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "jlt/appendix.hpp"
#include "jlt/globalize.hpp"
#include "jlt/grothendieck.hpp"
#include "jlt/group_expr.hpp"
#include "jlt/json.hpp"
#include "jlt/kottwitz.hpp"
#include "jlt/levi.hpp"
#include "jlt/report.hpp"
#include "jlt/satake.hpp"
#include "jlt/weyl.hpp"

namespace jlt {

enum ExitCode : int { exit_ok = 0, exit_domain = 1, exit_usage = 2 };

struct CommandRequest {
  std::string subcommand;
  std::map<std::string, std::string> options;
  bool json = false;
  bool ascii = false;
};

struct CommandResult {
  int exit_code = exit_ok;
  std::string out;
  std::string err;
};

inline const std::map<std::string, std::set<std::string>>& command_options() {
  static const std::map<std::string, std::set<std::string>> table = {
      {"levi", {"group", "remove"}},
      {"satake", {"group", "remove", "black", "degrees", "type-a", "d"}},
      {"appendix-a", {}},
      {"weyl", {"group", "theta"}},
      {"kottwitz", {"group"}},
      {"inner-forms", {"n"}},
      {"globalize", {"prime", "places", "class-order", "class", "group"}},
      {"division-algebra", {"n", "inv"}},
      {"lj", {"n", "d", "element"}},
  };
  return table;
}

namespace detail {

class Options {
 public:
  explicit Options(const CommandRequest& r) : r_(r) {}

  bool has(const std::string& k) const { return r_.options.count(k) > 0; }

  const std::string& text(const std::string& k) const {
    auto it = r_.options.find(k);
    if (it == r_.options.end()) throw input_error("missing required option --" + k);
    return it->second;
  }

  long long integer(const std::string& k) const {
    const std::string& s = text(k);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw input_error("--" + k + " expects an integer, got '" + s + "'");
    return v;
  }

  long long integer(const std::string& k, long long fallback) const { return has(k) ? integer(k) : fallback; }

 private:
  const CommandRequest& r_;
};

inline std::string numbers(const std::vector<std::size_t>& v) {
  std::vector<std::string> parts;
  for (auto x : v) parts.push_back(std::to_string(x));
  return parts.empty() ? "none" : join(parts, ", ");
}

inline std::string roots_text(const std::vector<std::size_t>& zero_based) {
  std::vector<std::string> parts;
  for (auto x : zero_based) parts.push_back("a" + std::to_string(x + 1));
  return parts.empty() ? "none" : join(parts, ", ");
}

inline std::vector<std::size_t> optional_root_list(const std::string& text) {
  if (text.find_first_not_of(" \t") == std::string::npos || text == "none") return {};
  return parse_root_list(text);
}

inline std::string finish(const TextStyle& st, const std::string& text) { return st.ascii ? to_ascii(text) : text; }

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

inline std::string run_levi(const Options& o, const CommandRequest& r, const TextStyle& st) {
  BasedRootDatum g = parse_group_expr(o.text("group"));
  LeviDescriptor desc = LeviDescriptor::removing(g, parse_root_list(o.text("remove")));
  LeviReport rep = analyze_levi(desc);
  if (r.json) return dump(levi_json(desc, rep, st));
  std::ostringstream s;
  s << "group: " << g.name() << " (" << g.type().str() << ", rank " << g.rank() << ")\n";
  s << "removed: " << roots_text(desc.removed()) << "\n";
  s << "theta: " << roots_text(desc.theta()) << "\n";
  s << "derived type: " << rep.derived_type.str() << "\n";
  s << "pi1(M_der): " << rep.derived_pi1.str() << "\n";
  s << "split component rank: " << rep.split_component_rank << (rep.maximal ? " (maximal)" : "") << "\n";
  s << "condition (1): " << (rep.condition_one ? "holds" : "fails") << "\n";
  if (rep.envelope) {
    s << "envelope: " << envelope_text(*rep.envelope, st) << "\n";
    for (const auto& b : rep.envelope->blocks) {
      std::vector<std::size_t> nodes;
      for (auto x : b.nodes) nodes.push_back(x);
      s << "  GL_" << b.size << " on " << roots_text(nodes) << ": " << block_kind_name(b.kind) << "\n";
    }
  }
  s << "structure: " << levi_structure_text(rep, st) << "\n";
  return finish(st, s.str());
}

inline std::vector<std::size_t> parse_degrees(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t v = 0;
    auto first = item.find_first_not_of(' '), last = item.find_last_not_of(' ');
    if (first == std::string::npos) throw input_error("empty entry in --degrees");
    item = item.substr(first, last - first + 1);
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || v == 0) throw input_error("bad degree '" + item + "'");
    out.push_back(v);
  }
  return out;
}

inline std::string run_satake(const Options& o, const CommandRequest& r, const TextStyle& st) {
  if (o.has("type-a")) {
    if (o.has("group") || o.has("remove") || o.has("black") || o.has("degrees"))
      throw input_error("--type-a cannot be combined with --group, --remove, --black or --degrees");
    const long long n = o.integer("type-a"), d = o.integer("d");
    SatakeDiagram diag = type_a_satake(n, d);
    const std::string form = "GL_" + std::to_string(n / d) + (d == 1 ? "(F)" : "(D_" + std::to_string(d) + ")");
    if (r.json)
      return dump({{"command", "satake"},
                   {"group", "GL(" + std::to_string(n) + ")"},
                   {"black", one_based(diag.black)},
                   {"diagram", render_diagram(diag, st)},
                   {"inner_form", form}});
    return finish(st, "diagram: " + render_diagram(diag, st) + "\nblack: " + roots_text(diag.black) + "\ninner form: " + form + "\n");
  }
  if (o.has("d")) throw input_error("--d is only used with --type-a");
  BasedRootDatum g = parse_group_expr(o.text("group"));
  LeviDescriptor desc = LeviDescriptor::removing(g, parse_root_list(o.text("remove")));
  LeviReport rep = analyze_levi(desc);
  if (!rep.condition_one) throw domain_error("the Levi does not satisfy condition (1)");
  if (o.has("black") == o.has("degrees")) throw input_error("give exactly one of --black and --degrees");
  std::vector<std::size_t> degrees;
  std::string diagram;
  std::vector<std::size_t> black;
  if (o.has("black")) {
    black = optional_root_list(o.text("black"));
    validate_subset(g, black);
    SatakeDiagram diag(g, black);
    black = diag.black;
    diagram = render_diagram(diag, st);
    degrees = degrees_from_diagram(desc, rep, black);
  } else {
    degrees = parse_degrees(o.text("degrees"));
  }
  InnerFormShape shape = transfer_levi(rep, degrees);
  if (r.json) {
    json j{{"command", "satake"}, {"group", g.name()}, {"removed", one_based(desc.removed())}};
    j["black"] = o.has("black") ? json(one_based(black)) : json(nullptr);
    j["diagram"] = o.has("black") ? json(diagram) : json(nullptr);
    j["degrees"] = degrees;
    j["structure"] = levi_structure_text(rep, st);
    j["inner_form"] = inner_shape_json(shape, st);
    return dump(j);
  }
  std::ostringstream s;
  s << "group: " << g.name() << "\n";
  s << "removed: " << roots_text(desc.removed()) << "\n";
  if (o.has("black")) s << "diagram: " << diagram << "\n";
  s << "structure: " << levi_structure_text(rep, st) << "\n";
  s << "division degrees: " << numbers(degrees) << "\n";
  s << "inner form: " << inner_form_statement(shape, st) << " (" << shape.field_note << ")\n";
  return finish(st, s.str());
}

inline std::string run_appendix(const CommandRequest& r, const TextStyle& st) {
  CatalogReport rep = appendix_catalog();
  if (r.json) return dump(catalog_json(rep));
  return appendix_markdown(rep, st);
}

inline std::string run_weyl(const Options& o, const CommandRequest& r, const TextStyle& st) {
  BasedRootDatum g = parse_group_expr(o.text("group"));
  std::vector<std::size_t> theta;
  if (o.has("theta")) theta = optional_root_list(o.text("theta"));
  validate_subset(g, theta);
  std::sort(theta.begin(), theta.end());
  json j{{"command", "weyl"}, {"group", g.name()}, {"type", g.type().str()}, {"theta", one_based(theta)}};
  if (g.semisimple_rank() <= weyl_enumeration_bound) j["order"] = weyl_group_order(g);
  else j["order"] = nullptr;
  WeylWord longest = longest_element(g, theta);
  j["longest_theta"] = longest.str();
  json reduced = json::array(), rank_one = json::array();
  WThetaResult wt = find_w_theta(g, theta);
  j["w_theta"] = {{"word", wt.word.str()}, {"image", one_based(wt.image)}};
  if (theta.size() < g.semisimple_rank()) {
    for (const auto& rr : reduced_roots(g, theta)) {
      std::vector<std::string> dir, mult;
      for (const auto& x : rr.direction) dir.push_back(x.str());
      for (const auto& x : rr.multiples) mult.push_back(x.str());
      reduced.push_back({{"direction", dir}, {"roots", rr.preimages.size()}, {"multiples", mult}});
    }
    for (const auto& ro : rank_one_decomposition(g, theta)) rank_one.push_back(ro.type.str());
  }
  j["reduced_roots"] = reduced;
  j["rank_one_types"] = rank_one;
  if (r.json) return dump(j);
  std::ostringstream s;
  s << "group: " << g.name() << " (" << g.type().str() << ")\n";
  s << "|W|: " << (j["order"].is_null() ? std::string("not enumerated above rank 6") : std::to_string(j["order"].get<unsigned long long>())) << "\n";
  s << "theta: " << roots_text(theta) << "\n";
  s << "longest element of W_theta: " << longest.str() << "\n";
  s << "w_theta: " << wt.word.str() << "\n";
  s << "w_theta(theta): " << roots_text(wt.image) << "\n";
  s << "reduced roots: " << reduced.size() << "\n";
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    std::vector<std::string> dir = reduced[i]["direction"], mult = reduced[i]["multiples"];
    s << "  (" << join(dir, ",") << "): " << reduced[i]["roots"].get<std::size_t>() << " roots, multiples " << join(mult, ",")
      << ", M_alpha of type " << rank_one[i].get<std::string>() << "\n";
  }
  return finish(st, s.str());
}

inline std::string run_kottwitz(const Options& o, const CommandRequest& r, const TextStyle& st) {
  BasedRootDatum g = parse_group_expr(o.text("group"));
  FiniteAbelianGroup a = kottwitz_group(g), pi1 = fundamental_group(g), z = center_character_group(g);
  Int ad = ad_quotient_order(g);
  const bool torus = kottwitz_dual_center_is_disconnected_torus(g);
  if (r.json)
    return dump({{"command", "kottwitz"},
                 {"group", g.name()},
                 {"type", g.type().str()},
                 {"kottwitz", group_json(a)},
                 {"fundamental_group", group_json(pi1)},
                 {"center_characters", group_json(z)},
                 {"ad_order", ad.str()},
                 {"dual_center_has_torus", torus}});
  std::ostringstream s;
  s << "group: " << g.name() << " (" << g.type().str() << ")\n";
  s << "A(G): " << a.str() << " (order " << a.order().str() << ")\n";
  s << "pi1(G): " << pi1.str() << "\n";
  s << "X*(Z(G)): " << z.str() << "\n";
  s << "|A(G^ad)|: " << ad.str() << "\n";
  if (torus) s << "note: Z(G^) has a torus part; A(G) is the dual of its component group\n";
  return finish(st, s.str());
}

inline std::string run_inner_forms(const Options& o, const CommandRequest& r, const TextStyle& st) {
  const long long n = o.integer("n");
  auto classes = inner_form_classes_gl(n);
  if (r.json) {
    json a = json::array();
    for (const auto& c : classes)
      a.push_back({{"j", c.j},
                   {"invariant", QmodZ(c.j, c.n).str()},
                   {"d", c.d},
                   {"m", c.m()},
                   {"group", c.description()}});
    return dump({{"command", "inner-forms"}, {"n", n}, {"classes", a}});
  }
  std::ostringstream s;
  s << "inner forms of GL_" << n << " (A(PGL_" << n << ") = Z/" << n << "):\n";
  for (const auto& c : classes) s << "  " << QmodZ(c.j, c.n).str() << ": " << c.description() << "\n";
  return finish(st, s.str());
}

inline std::string run_globalize(const Options& o, const CommandRequest& r, const TextStyle& st) {
  const long long p = o.integer("prime"), l = o.integer("places");
  long long order = 0;
  if (o.has("group")) {
    if (o.has("class-order")) throw input_error("give --class-order or --group, not both");
    Int ad = ad_quotient_order(parse_group_expr(o.text("group")));
    if (ad > 1000000) throw input_error("class order too large");
    order = static_cast<long long>(ad);
    if (order == 1) throw domain_error("the group has no proper inner forms: A(G^ad) is trivial");
  } else {
    order = o.integer("class-order");
  }
  GlobalizationPlan g = globalization_plan(p, l, order, o.integer("class", 1));
  if (r.json) return dump(plan_json(g));
  std::ostringstream s;
  s << "base prime: " << p << "\n";
  s << "tower primes: ";
  std::vector<std::string> q;
  for (auto x : g.places.tower_primes) q.push_back(std::to_string(x));
  s << (q.empty() ? "none" : join(q, ", ")) << "\n";
  s << "degree: 2^" << g.places.r << " = " << g.places.degree << "\n";
  s << "places T: " << g.places.places.size() << "\n";
  for (std::size_t i = 0; i < g.places.places.size(); ++i)
    s << "  " << g.places.places[i].id << " (" << g.places.places[i].tag << "): " << g.cocycle.assignment[i].str() << "\n";
  s << "S: " << g.s.size() << " places, a multiple of " << g.class_order << "\n";
  s << "cocycle sum: " << g.cocycle.sum.str() << (g.cocycle.valid ? " (valid)" : " (invalid)") << "\n";
  return finish(st, s.str());
}

inline std::string run_division_algebra(const Options& o, const CommandRequest& r, const TextStyle& st, int& code) {
  DivisionAlgebraResult res = global_division_algebra(o.integer("n"), parse_hasse_vector(o.text("inv")));
  if (!res.valid) code = exit_domain;
  if (r.json) return dump(division_algebra_json(res));
  std::ostringstream s;
  s << "n: " << res.n << "\n";
  for (const auto& p : res.places)
    s << "  " << p.place << " (" << place_kind_name(p.kind) << "): inv " << p.invariant.str() << ", GL_" << p.m
      << (p.d == 1 ? "(F)" : "(D_" + std::to_string(p.d) + ")") << "\n";
  s << "sum: " << res.sum.str() << "\n";
  s << "non-split places: " << (res.nonsplit.empty() ? std::string("none") : join(res.nonsplit, ", ")) << "\n";
  s << "verdict: " << (res.valid ? "a global central simple algebra exists" : "no global algebra: invariants do not sum to 0")
    << "\n";
  return finish(st, s.str());
}

inline std::string run_lj(const Options& o, const CommandRequest& r, const TextStyle& st) {
  const long long n = o.integer("n"), d = o.integer("d");
  if (n < 1 || d < 1) throw input_error("--n and --d must be positive");
  if (n % d != 0) throw domain_error(std::to_string(d) + " does not divide " + std::to_string(n));
  VirtualElement x = parse_virtual(o.text("element"), GroupSide{n, 1});
  VirtualElement y = lj_map(x, d);
  if (r.json)
    return dump({{"command", "lj"},
                 {"n", n},
                 {"d", d},
                 {"input", virtual_json(x)},
                 {"image", virtual_json(y)},
                 {"d_compatible", !y.is_zero()},
                 {"character_sign", character_sign(n, n / d)}});
  return finish(st, y.str() + "\n");
}

}  // namespace detail

/// Validates options and dispatches. Exit 0 on success, 1 on domain errors,
/// 2 on usage errors.
inline CommandResult run(const CommandRequest& r) {
  CommandResult res;
  auto known = command_options().find(r.subcommand);
  if (known == command_options().end()) {
    res.exit_code = exit_usage;
    res.err = "unknown subcommand '" + r.subcommand + "'\n";
    return res;
  }
  for (const auto& [k, v] : r.options)
    if (!known->second.count(k)) {
      res.exit_code = exit_usage;
      res.err = "option --" + k + " is not valid for " + r.subcommand + "\n";
      return res;
    }
  const TextStyle st{r.ascii};
  const detail::Options o(r);
  try {
    int code = exit_ok;
    const std::string& c = r.subcommand;
    if (c == "levi") res.out = detail::run_levi(o, r, st);
    else if (c == "satake") res.out = detail::run_satake(o, r, st);
    else if (c == "appendix-a") res.out = detail::run_appendix(r, st);
    else if (c == "weyl") res.out = detail::run_weyl(o, r, st);
    else if (c == "kottwitz") res.out = detail::run_kottwitz(o, r, st);
    else if (c == "inner-forms") res.out = detail::run_inner_forms(o, r, st);
    else if (c == "globalize") res.out = detail::run_globalize(o, r, st);
    else if (c == "division-algebra") res.out = detail::run_division_algebra(o, r, st, code);
    else if (c == "lj") res.out = detail::run_lj(o, r, st);
    res.exit_code = code;
  } catch (const input_error& e) {
    res.exit_code = exit_usage;
    res.err = std::string("error: ") + e.what() + "\n";
  } catch (const domain_error& e) {
    res.exit_code = exit_domain;
    res.err = std::string("error: ") + e.what() + "\n";
  }
  return res;
}

}  // namespace jlt
