#pragma once

// JSON views of the library's results (nlohmann::json).

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "jlt/appendix.hpp"
#include "jlt/globalize.hpp"
#include "jlt/grothendieck.hpp"
#include "jlt/kottwitz.hpp"
#include "jlt/levi.hpp"
#include "jlt/satake.hpp"

namespace jlt {

using json = nlohmann::ordered_json;

inline std::vector<std::size_t> one_based(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out;
  for (auto x : v) out.push_back(x + 1);
  return out;
}

inline json group_json(const FiniteAbelianGroup& g) {
  json j;
  j["invariant_factors"] = json::array();
  for (const auto& f : g.invariant_factors()) j["invariant_factors"].push_back(f.str());
  j["order"] = g.order().str();
  j["text"] = g.str();
  return j;
}

inline json envelope_json(const GlEnvelope& env) {
  json blocks = json::array();
  for (const auto& b : env.blocks)
    blocks.push_back({{"size", b.size}, {"nodes", one_based(b.nodes)}, {"kind", block_kind_name(b.kind)}});
  return {{"blocks", blocks},
          {"central_gl1", env.central_gl1},
          {"equals_levi", env.equals_levi},
          {"product_form", env.product_form},
          {"product_gl1", env.product_gl1}};
}

inline json levi_json(const LeviDescriptor& desc, const LeviReport& rep, const TextStyle& st) {
  json j;
  j["command"] = "levi";
  j["group"] = desc.ambient().name();
  j["type"] = desc.ambient().type().str();
  j["removed"] = one_based(desc.removed());
  j["theta"] = one_based(desc.theta());
  j["derived_type"] = rep.derived_type.str();
  j["derived_pi1"] = group_json(rep.derived_pi1);
  j["split_component_rank"] = rep.split_component_rank;
  j["maximal"] = rep.maximal;
  j["condition_one"] = rep.condition_one;
  j["envelope"] = rep.envelope ? envelope_json(*rep.envelope) : json(nullptr);
  j["structure"] = levi_structure_text(rep, st);
  return j;
}

inline json inner_shape_json(const InnerFormShape& s, const TextStyle& st) {
  json factors = json::array();
  for (const auto& f : s.factors)
    factors.push_back({{"m", f.m}, {"d", f.d}, {"kind", block_kind_name(f.kind)}, {"text", factor_text(f, true)}});
  return {{"factors", factors},
          {"central_gl1", s.central_gl1},
          {"exact", s.exact},
          {"field_note", s.field_note},
          {"statement", inner_form_statement(s, st)}};
}

inline json flag_json(const CatalogFlag& f) {
  return {{"category", f.category}, {"variant", f.variant}, {"message", f.message}};
}

inline json evaluated_json(const std::vector<EvaluatedFactor>& fs) {
  json a = json::array();
  for (const auto& f : fs)
    a.push_back({{"text", f.text}, {"kind", f.kind}, {"m", f.m.str()}, {"d", f.d.str()}, {"integral", f.integral()}});
  return a;
}

inline json catalog_json(const CatalogReport& rep) {
  const TextStyle st{};
  json entries = json::array();
  for (const auto& e : rep.entries) {
    const CatalogEntry& c = *e.entry;
    json variants = json::array();
    for (const auto& v : e.variants)
      variants.push_back({{"label", v.variant->label},
                          {"black", v.variant->black},
                          {"diagram", v.diagram},
                          {"diagram_ascii", v.diagram_ascii},
                          {"degrees", v.degrees},
                          {"stated_inner", v.variant->stated_inner},
                          {"stated_factors", evaluated_json(v.stated)},
                          {"recomputed", inner_shape_json(v.shape, st)},
                          {"candidates", v.candidates},
                          {"consistent", v.consistent}});
    json flags = json::array();
    for (const auto& f : e.flags) flags.push_back(flag_json(f));
    json params = json::object();
    for (const auto& [k, v] : c.parameters) params[k] = v;
    entries.push_back({{"id", c.id},
                       {"family", c.family},
                       {"group", c.group},
                       {"instance", c.instance},
                       {"parameters", params},
                       {"removed_label", c.removed_label},
                       {"removed", c.removed},
                       {"stated_levi", c.stated_levi},
                       {"stated_envelope", c.stated_envelope},
                       {"stated_envelope_factors", evaluated_json(e.stated_envelope)},
                       {"stated_form", levi_form_name(c.stated_form)},
                       {"derived_type", e.report.derived_type.str()},
                       {"split_component_rank", e.report.split_component_rank},
                       {"envelope", envelope_json(*e.report.envelope)},
                       {"structure", levi_structure_text(e.report, st)},
                       {"form", levi_form_name(e.form)},
                       {"variants", variants},
                       {"flags", flags}});
  }
  json rigid = json::array();
  for (const auto& r : rep.rigid)
    rigid.push_back({{"id", r.entry->id},
                     {"instance", r.entry->instance},
                     {"type", r.type.str()},
                     {"ad_order", r.ad_order.str()},
                     {"inner_forms", json::array()}});
  return {{"command", "appendix-a"}, {"entries", entries}, {"rigid", rigid}};
}

inline json cocycle_json(const Cocycle& c) {
  json a = json::array();
  for (const auto& x : c.assignment) a.push_back(x.str());
  return {{"order", c.order}, {"class", c.cls}, {"assignment", a}, {"sum", c.sum.str()}, {"valid", c.valid}};
}

inline json plan_json(const GlobalizationPlan& g) {
  json places = json::array();
  for (const auto& p : g.places.places)
    places.push_back({{"id", p.id}, {"kind", place_kind_name(p.kind)}, {"prime", p.prime}, {"tag", p.tag}});
  json s = json::array();
  for (auto i : g.s) s.push_back(g.places.places[i].id);
  return {{"command", "globalize"},
          {"base_prime", g.places.base_prime},
          {"r", g.places.r},
          {"tower_primes", g.places.tower_primes},
          {"degree", g.places.degree},
          {"places", places},
          {"s", s},
          {"s_multiple_of", g.class_order},
          {"cocycle", cocycle_json(g.cocycle)}};
}

inline json division_algebra_json(const DivisionAlgebraResult& r) {
  json places = json::array();
  for (const auto& p : r.places)
    places.push_back({{"place", p.place},
                      {"kind", place_kind_name(p.kind)},
                      {"invariant", p.invariant.str()},
                      {"d", p.d},
                      {"m", p.m}});
  return {{"command", "division-algebra"},
          {"n", r.n},
          {"sum", r.sum.str()},
          {"valid", r.valid},
          {"places", places},
          {"nonsplit", r.nonsplit}};
}

inline json virtual_json(const VirtualElement& x) {
  json terms = json::array();
  for (const auto& [b, c] : x.terms())
    terms.push_back({{"composition", b.composition}, {"labels", b.labels}, {"coefficient", c.str()}});
  return {{"group", x.side().str()}, {"m", x.side().m}, {"d", x.side().d}, {"text", x.str()}, {"terms", terms}};
}

}  // namespace jlt
