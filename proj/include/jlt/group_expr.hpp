#pragma once

// Group expressions: "SL(5)", "E7sc", "GL(3)xGL(2)", "Spin(9) x GL(1)".

#include <cctype>
#include <string>
#include <vector>

#include "jlt/error.hpp"
#include "jlt/rootdata.hpp"

namespace jlt {

namespace detail {

class GroupExprParser {
public:
  explicit GroupExprParser(const std::string& text) : s_(text) {}

  BasedRootDatum parse() {
    skip_space();
    if (pos_ == s_.size()) throw input_error("empty group expression", pos_);
    BasedRootDatum result = factor();
    std::string name = result.name();
    while (true) {
      skip_space();
      if (pos_ == s_.size()) break;
      if (s_[pos_] != 'x') throw input_error("expected 'x' between group factors", pos_);
      ++pos_;
      skip_space();
      BasedRootDatum next = factor();
      name += "x" + next.name();
      result = direct_sum(result, next);
    }
    return result.renamed(name);
  }

private:
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  BasedRootDatum factor() {
    const std::size_t start = pos_;
    const CatalogTag* best = nullptr;
    for (const auto& t : catalog_tags())
      if (s_.compare(pos_, t.name.size(), t.name) == 0 && (!best || t.name.size() > best->name.size())) best = &t;
    if (!best) throw input_error("unknown group tag; known tags: " + known_tags_list(), start);
    pos_ += best->name.size();
    std::vector<long long> params;
    if (best->parametric) {
      skip_space();
      if (pos_ >= s_.size() || s_[pos_] != '(') throw input_error("expected '(' after " + best->name, pos_);
      ++pos_;
      skip_space();
      const std::size_t num_start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == num_start) throw input_error("expected a positive integer", num_start);
      if (pos_ - num_start > 6) throw input_error("size parameter too large", num_start);
      params.push_back(std::stoll(s_.substr(num_start, pos_ - num_start)));
      skip_space();
      if (pos_ >= s_.size() || s_[pos_] != ')') throw input_error("expected ')'", pos_);
      ++pos_;
    } else if (pos_ < s_.size() && s_[pos_] == '(') {
      throw input_error(best->name + " takes no parameter", pos_);
    }
    try {
      return build_catalog_group(best->name, params);
    } catch (const input_error& e) {
      throw input_error(e.what(), start);
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline BasedRootDatum parse_group_expr(const std::string& text) { return detail::GroupExprParser(text).parse(); }

}  // namespace jlt
