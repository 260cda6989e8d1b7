#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "srct/hecke.hpp"

namespace srct {

/// Flattened standardized column word with '|' between columns.
inline std::string class_key(const Tableau& t) {
  std::string key;
  bool first_col = true;
  for (const auto& col : standardized_column_word(t)) {
    if (!first_col) key += '|';
    first_col = false;
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (i) key += ' ';
      key += std::to_string(col[i]);
    }
  }
  return key;
}

/// Tableaux whose non-descents i < n all have i+1 immediately left of i.
inline bool is_source(const Tableau& t) {
  for (int i = 1; i < t.size(); ++i) {
    if (is_descent(i, t)) continue;
    const Cell a = t.position(i), b = t.position(i + 1);
    if (!(b.row == a.row && b.col == a.col - 1)) return false;
  }
  return true;
}

/// Tableaux whose descents are all attacking.
inline bool is_sink(const Tableau& t) {
  for (int i = 1; i < t.size(); ++i)
    if (is_descent(i, t) && !is_attacking(i, t)) return false;
  return true;
}

/// One equivalence class of SRCT(alpha) under equality of standardized column words.
struct SrctClass {
  Composition shape;
  std::vector<std::vector<int>> st_word;
  std::vector<Tableau> members;  // sorted by column word
  Tableau source;
  Tableau sink;
  IndexSet drn;

  std::string key() const { return class_key(members.front()); }
  bool contains(const Tableau& t) const { return std::binary_search(members.begin(), members.end(), t, by_column_word); }

  static bool by_column_word(const Tableau& a, const Tableau& b) { return column_word(a) < column_word(b); }
};

inline IndexSet drn(const SrctClass& cls) { return distinguished_removable_columns(cls.members.front()); }

namespace detail {

inline const Tableau& unique_member(const std::vector<Tableau>& members, bool (*pred)(const Tableau&),
                                    const char* what) {
  const Tableau* hit = nullptr;
  for (const auto& t : members) {
    if (!pred(t)) continue;
    if (hit) throw verification_failure(std::string("class has more than one ") + what + ": " + t.to_string());
    hit = &t;
  }
  if (!hit) throw verification_failure(std::string("class has no ") + what + ": " + members.front().to_string());
  return *hit;
}

}  // namespace detail

/// The unique source of the class; also checks that 1 sits in the smallest
/// distinguished column.
inline const Tableau& source_of(const SrctClass& cls) {
  const Tableau& s = detail::unique_member(cls.members, is_source, "source");
  const IndexSet d = drn(cls);
  if (s.position(1).col != *d.begin()) throw verification_failure("source does not hold 1 in the min DRN column: " + s.to_string());
  return s;
}

inline const Tableau& sink_of(const SrctClass& cls) {
  const Tableau& s = detail::unique_member(cls.members, is_sink, "sink");
  const IndexSet d = drn(cls);
  if (s.position(1).col != *d.rbegin()) throw verification_failure("sink does not hold 1 in the max DRN column: " + s.to_string());
  return s;
}

/// Partition of the given tableaux (all of one straight shape) into classes,
/// ordered by the column word of each class's source.
inline std::vector<SrctClass> partition_into_classes(const Composition& a, const std::vector<Tableau>& all) {
  std::map<std::string, std::vector<Tableau>> groups;
  for (const auto& t : all) groups[class_key(t)].push_back(t);
  std::vector<SrctClass> out;
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end(), SrctClass::by_column_word);
    SrctClass cls;
    cls.shape = a;
    cls.st_word = standardized_column_word(members.front());
    cls.members = std::move(members);
    cls.drn = drn(cls);
    cls.source = source_of(cls);
    cls.sink = sink_of(cls);
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(),
            [](const SrctClass& x, const SrctClass& y) { return column_word(x.source) < column_word(y.source); });
  return out;
}

inline std::vector<SrctClass> equivalence_classes(const Composition& a) {
  return partition_into_classes(a, enumerate_srct(a));
}

/// The class E_alpha of the canonical tableau: SRCTs with every column
/// increasing top to bottom.
inline SrctClass canonical_class(const Composition& a) {
  const Tableau canon = canonical_tableau(a);
  for (auto& cls : equivalence_classes(a))
    if (cls.contains(canon)) return cls;
  throw verification_failure("canonical tableau missing from enumeration of " + a.to_string());
}

/// Straight tableaux whose columns all increase downward.
inline bool has_increasing_columns(const Tableau& t) {
  for (int c = 1; c <= t.shape().max_part(); ++c) {
    auto col = t.column(c);
    if (!std::is_sorted(col.begin(), col.end())) return false;
  }
  return true;
}

}  // namespace srct
