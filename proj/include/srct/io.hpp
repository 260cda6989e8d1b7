#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "srct/modrep.hpp"
#include "srct/poset.hpp"
#include "srct/shifted.hpp"

namespace srct {

using json = nlohmann::ordered_json;

/// Rows separated by '/', entries by commas or spaces: "5,4,2/9,7,6,3".
/// An empty row is allowed (skew rows made only of inner cells).
inline std::vector<std::vector<int>> parse_rows(std::string_view text) {
  std::vector<std::vector<int>> rows(1);
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '/') {
      rows.emplace_back();
      ++i;
    } else if (ch == ',' || ch == ' ') {
      ++i;
    } else if (ch >= '0' && ch <= '9') {
      int v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        if (v > 1000000) throw invalid_input("entry too large at position " + std::to_string(i));
        ++i;
      }
      rows.back().push_back(v);
    } else {
      throw invalid_input("unexpected character '" + std::string(1, ch) + "' at position " + std::to_string(i));
    }
  }
  return rows;
}

inline void to_json(json& j, const Composition& a) { j = a.parts(); }

inline void to_json(json& j, const SkewShapePair& s) { j = {{"outer", s.outer}, {"inner", s.inner}}; }

inline void to_json(json& j, const Permutation& p) { j = p.one_line(); }

inline void to_json(json& j, const Tableau& t) {
  j = json::object();
  j["shape"] = t.shape();
  if (t.is_skew()) j["inner"] = t.inner();
  j["rows"] = t.rows();
}

inline json tableau_detail(const Tableau& t) {
  json j = t;
  j["descents"] = descent_set(t);
  j["column_word"] = column_word(t);
  return j;
}

template <typename Basis>
void to_json(json& j, const QuasiSym<Basis>& q) {
  j = json::object();
  for (const auto& [a, c] : q.sorted_terms()) j[a.to_string()] = c;
}

inline void to_json(json& j, const FinitePoset& p) {
  j = json::object();
  j["elements"] = p.elements();
  j["covers"] = p.covers();
  j["graded"] = p.graded();
  if (p.graded()) {
    j["ranks"] = p.ranks();
    j["rank_vector"] = p.rank_vector();
  }
}

inline void to_json(json& j, const SrctClass& c) {
  j = json::object();
  j["key"] = c.key();
  j["size"] = c.members.size();
  j["drn"] = c.drn;
  j["source"] = c.source;
  j["sink"] = c.sink;
  j["members"] = c.members;
}

inline void to_json(json& j, const HeckeModule& m) {
  j = json::object();
  j["degree"] = m.degree;
  j["basis"] = m.basis;
  json gens = json::array();
  for (const auto& g : m.generators) gens.push_back(g.to_rows());
  j["generators"] = gens;
}

inline void to_json(json& j, const ShiftedTableau& t) {
  j = json::object();
  j["shape"] = t.shape.alpha();
  if (t.shape.truncated()) j["truncation"] = t.shape.truncation();
  j["rows"] = t.rows;
}

inline void to_json(json& j, const CountReport& r) {
  j = json::object();
  j["family"] = family_name(r.family);
  j["parameter"] = r.parameter.size() == 1 ? json(r.parameter[0]) : json(r.parameter);
  j["shape"] = r.shape;
  // counts can exceed 64 bits in principle; emit as numbers when they fit
  auto num = [](const BigInt& b) { return b <= BigInt(INT64_MAX) ? json(static_cast<std::int64_t>(b)) : json(b.str()); };
  j["formula"] = num(r.formula);
  j["enumerated"] = num(r.enumerated);
  if (r.truncated) {
    j["truncated_shape"] = r.truncated->to_string();
    j["truncated_count"] = num(*r.truncated_count);
  }
  j["match"] = r.match();
}

inline void to_json(json& j, const RankRecord& r) {
  j = json::object();
  j["shape"] = r.shape;
  j["class"] = r.class_key;
  j["size"] = r.size;
  j["rank_vector"] = r.ranks;
  j["symmetric"] = r.symmetric;
  j["unimodal"] = r.unimodal;
}

}  // namespace srct
