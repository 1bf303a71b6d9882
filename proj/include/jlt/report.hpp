#pragma once

// Markdown rendering of the recomputed Levi catalog.

#include <sstream>
#include <string>
#include <vector>

#include "jlt/appendix.hpp"
#include "jlt/satake.hpp"

namespace jlt {

namespace detail {

inline std::string bindings_text(const Bindings& b) {
  std::vector<std::string> parts;
  for (const auto& [k, v] : b) parts.push_back(k + " = " + std::to_string(v));
  return join(parts, ", ");
}

inline std::string indices_text(const std::vector<std::size_t>& one_based) {
  std::vector<std::string> parts;
  for (auto i : one_based) parts.push_back(std::to_string(i));
  return join(parts, ", ");
}

inline std::string evaluated_text(const std::vector<EvaluatedFactor>& fs, bool inner) {
  std::vector<std::string> parts;
  for (const auto& f : fs) parts.push_back(f.instance_text(inner));
  return parts.empty() ? "1" : join(parts, " × ");
}

inline std::string flag_line(const CatalogFlag& f) {
  return "- [" + f.category + (f.variant.empty() ? "" : ", " + f.variant) + "] " + f.message;
}

}  // namespace detail

inline std::string appendix_markdown(const CatalogReport& rep, const TextStyle& st = {}) {
  std::ostringstream o;
  o << "# Levi catalog, recomputed\n\n";
  o << "Stated text is kept verbatim. Each entry is evaluated at the listed instance and\n"
       "recomputed from the root datum. Central GL_1 factors are not compared: the\n"
       "recomputed envelope uses the fewest central GL_1 factors that still embed M.\n\n";
  o << "| entry | group | instance | stated M̃ | recomputed M̃ | form | flags |\n";
  o << "|---|---|---|---|---|---|---|\n";
  for (const auto& e : rep.entries) {
    o << "| " << e.entry->id << " | " << e.entry->group << " | " << e.entry->instance << " | "
      << e.entry->stated_envelope << " | " << envelope_text(*e.report.envelope) << " | " << levi_form_name(e.form)
      << " | " << e.flags.size() << " |\n";
  }
  for (const auto& r : rep.rigid)
    o << "| " << r.entry->id << " | " << r.type.str() << " | " << r.entry->instance << " | | | | 0 |\n";
  o << "\n";

  for (const auto& e : rep.entries) {
    const CatalogEntry& c = *e.entry;
    o << "## " << c.id << " " << c.family << ": " << c.group << "\n\n";
    o << "- instance: " << c.instance;
    if (!c.parameters.empty()) o << " (" << detail::bindings_text(c.parameters) << ")";
    o << "\n";
    o << "- removed simple roots: " << c.removed_label;
    if (c.removed_label.find("Bourbaki") == std::string::npos) o << " (Bourbaki " << detail::indices_text(c.removed) << ")";
    o << "\n";
    o << "- derived type: " << e.report.derived_type.str() << ", split component rank "
      << e.report.split_component_rank << "\n";
    o << "- stated M: " << c.stated_levi << "\n";
    o << "- recomputed M: " << levi_structure_text(e.report) << "\n";
    o << "- stated M̃ at the instance: " << detail::evaluated_text(e.stated_envelope, false) << "\n";
    o << "- form: stated " << levi_form_name(c.stated_form) << ", recomputed " << levi_form_name(e.form) << "\n";
    for (const auto& v : e.variants) {
      o << "\n### " << (v.variant->label.empty() ? std::string("inner form") : v.variant->label) << "\n\n";
      o << "- Satake diagram: " << v.diagram << " (black " << detail::indices_text(v.variant->black) << ")\n";
      o << "- division degrees per block: " << detail::indices_text(v.degrees) << "\n";
      o << "- stated M′: " << v.variant->stated_inner << "\n";
      o << "- stated M′ at the instance: " << detail::evaluated_text(v.stated, true) << "\n";
      o << "- recomputed M′: " << inner_form_statement(v.shape) << " (" << v.shape.field_note << ")\n";
      if (!v.candidates.empty()) o << "- consistent alternatives: " << join(v.candidates, ", ") << "\n";
      o << "- consistent: " << (v.consistent ? "yes" : "no") << "\n";
    }
    o << "\n";
    if (e.flags.empty()) {
      o << "Flags: none.\n\n";
    } else {
      o << "Flags:\n\n";
      for (const auto& f : e.flags) o << detail::flag_line(f) << "\n";
      o << "\n";
    }
  }

  o << "## (7) groups without proper inner forms\n\n";
  o << "| group | type | order of A(G^ad) | inner forms |\n|---|---|---|---|\n";
  for (const auto& r : rep.rigid)
    o << "| " << r.entry->instance << " | " << r.type.str() << " | " << r.ad_order.str() << " | [] |\n";
  std::string out = o.str();
  return st.ascii ? to_ascii(out) : out;
}

}  // namespace jlt
