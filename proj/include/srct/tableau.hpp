#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srct/composition.hpp"
#include "srct/permutation.hpp"

namespace srct {

/// Number of inner cells at the left of row `r` (0-based) when `inner` is
/// drawn in the bottom-left corner of `outer`.
inline int inner_length(const Composition& outer, const Composition& inner, std::size_t r) {
  const std::size_t offset = outer.length() - inner.length();
  return r < offset ? 0 : inner[r - offset];
}

/// Whether `inner` fits in the bottom-left corner of `outer` cell-wise.
inline bool fits_bottom_left(const Composition& outer, const Composition& inner) {
  if (inner.length() > outer.length()) return false;
  for (std::size_t r = 0; r < outer.length(); ++r)
    if (inner_length(outer, inner, r) > outer[r]) return false;
  return true;
}

enum class Rule { none, malformed, row_decrease, first_column, triple_rule };

inline const char* rule_name(Rule r) {
  switch (r) {
    case Rule::none: return "none";
    case Rule::malformed: return "malformed";
    case Rule::row_decrease: return "row_decrease";
    case Rule::first_column: return "first_column";
    case Rule::triple_rule: return "triple_rule";
  }
  return "?";
}

struct Validation {
  Rule rule = Rule::none;
  std::string detail;
  explicit operator bool() const noexcept { return rule == Rule::none; }
};

/// A bijective filling of a (possibly skew) reverse composition diagram.
/// Inner cells are absent; internally they hold 0 in the grid. Cells and
/// rows are 1-based in the public interface.
class Tableau {
 public:
  static constexpr int infinity = std::numeric_limits<int>::max();

  Tableau() = default;

  /// `rows[r]` lists the entries of the non-inner cells of row r, left to
  /// right. Throws invalid_input if the data is not a bijective filling of
  /// outer//inner; the tableau rules are not checked here.
  Tableau(Composition outer, Composition inner, const std::vector<std::vector<int>>& rows)
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!fits_bottom_left(outer_, inner_)) throw invalid_input("inner shape does not fit in outer shape");
    if (rows.size() != outer_.length()) throw invalid_input("row count does not match shape");
    size_ = outer_.size() - inner_.size();
    where_.assign(static_cast<std::size_t>(size_) + 1, Cell{});
    grid_.resize(outer_.length());
    for (std::size_t r = 0; r < outer_.length(); ++r) {
      const int skip = inner_length(outer_, inner_, r);
      if (static_cast<int>(rows[r].size()) != outer_[r] - skip)
        throw invalid_input("row " + std::to_string(r + 1) + " has the wrong number of cells");
      grid_[r].assign(static_cast<std::size_t>(skip), 0);
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        const int v = rows[r][c];
        if (v < 1 || v > size_ || where_[static_cast<std::size_t>(v)].row != 0)
          throw invalid_input("entries are not a bijection onto {1..n}");
        where_[static_cast<std::size_t>(v)] = {static_cast<int>(r) + 1, skip + static_cast<int>(c) + 1};
        grid_[r].push_back(v);
      }
    }
  }

  /// Straight-shape convenience constructor.
  Tableau(Composition shape, const std::vector<std::vector<int>>& rows) : Tableau(std::move(shape), Composition{}, rows) {}

  const Composition& shape() const noexcept { return outer_; }
  const Composition& inner() const noexcept { return inner_; }
  bool is_skew() const noexcept { return !inner_.empty(); }
  int size() const noexcept { return size_; }
  std::size_t num_rows() const noexcept { return outer_.length(); }

  /// Entries of the non-inner cells of each row.
  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(grid_.size());
    for (std::size_t r = 0; r < grid_.size(); ++r)
      for (int v : grid_[r])
        if (v != 0) out[r].push_back(v);
    return out;
  }

  /// Cell holding entry v.
  Cell position(int v) const { return where_.at(static_cast<std::size_t>(v)); }

  bool in_shape(int row, int col) const {
    return row >= 1 && row <= static_cast<int>(outer_.length()) && col >= 1 && col <= outer_[static_cast<std::size_t>(row - 1)];
  }
  bool is_inner(int row, int col) const {
    return in_shape(row, col) && col <= inner_length(outer_, inner_, static_cast<std::size_t>(row - 1));
  }
  /// Entry at (row, col); infinity on inner cells. Precondition: in_shape.
  int at(int row, int col) const {
    const int v = grid_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
    return v == 0 ? infinity : v;
  }

  /// Filling with entries i and i+1 interchanged (no validity check).
  Tableau swapped(int i) const {
    Tableau t = *this;
    const Cell a = where_.at(static_cast<std::size_t>(i));
    const Cell b = where_.at(static_cast<std::size_t>(i + 1));
    t.grid_[static_cast<std::size_t>(a.row - 1)][static_cast<std::size_t>(a.col - 1)] = i + 1;
    t.grid_[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - 1)] = i;
    std::swap(t.where_[static_cast<std::size_t>(i)], t.where_[static_cast<std::size_t>(i + 1)]);
    return t;
  }

  /// Entries of column c (1-based) read top to bottom, skipping inner cells.
  std::vector<int> column(int c) const {
    std::vector<int> out;
    for (const auto& row : grid_)
      if (static_cast<int>(row.size()) >= c && row[static_cast<std::size_t>(c - 1)] != 0)
        out.push_back(row[static_cast<std::size_t>(c - 1)]);
    return out;
  }

  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.outer_ == b.outer_ && a.inner_ == b.inner_ && a.grid_ == b.grid_;
  }
  friend auto operator<=>(const Tableau& a, const Tableau& b) {
    if (auto c = a.outer_ <=> b.outer_; c != 0) return c;
    if (auto c = a.inner_ <=> b.inner_; c != 0) return c;
    return a.grid_ <=> b.grid_;
  }

  /// Compact text form: rows separated by '/', inner cells shown as '.'.
  std::string to_string() const {
    std::string s;
    for (std::size_t r = 0; r < grid_.size(); ++r) {
      if (r) s += " / ";
      for (std::size_t c = 0; c < grid_[r].size(); ++c) {
        if (c) s += ' ';
        s += grid_[r][c] == 0 ? std::string(".") : std::to_string(grid_[r][c]);
      }
    }
    return s;
  }

 private:
  Composition outer_;
  Composition inner_;
  std::vector<std::vector<int>> grid_;
  std::vector<Cell> where_;
  int size_ = 0;
};

using Srct = Tableau;
using SkewSrct = Tableau;

namespace detail {

// Triple-rule instances over rows i < j and column k, evaluated on a grid
// where known(r, c) reports whether a value is fixed. Unknown cells are
// assumed smaller than every known value (the enumerator fills from n down).
// Returns false on a definite violation.
template <typename Known, typename Value>
bool triple_rule_consistent(const Composition& outer, const Composition& inner, Known known, Value value,
                            std::string* detail) {
  const int len = static_cast<int>(outer.length());
  for (int j = 1; j <= len; ++j) {
    const int inner_j = inner_length(outer, inner, static_cast<std::size_t>(j - 1));
    for (int k = 1; k < outer[static_cast<std::size_t>(j - 1)]; ++k) {
      if (k + 1 <= inner_j) continue;  // (j, k+1) must be a skew cell
      for (int i = 1; i < j; ++i) {
        const int len_i = outer[static_cast<std::size_t>(i - 1)];
        if (k > len_i) continue;
        const bool kb = known(i, k), ka = known(j, k + 1);
        bool b_greater;
        if (kb && ka) b_greater = value(i, k) > value(j, k + 1);
        else if (kb) b_greater = true;
        else if (ka) b_greater = false;
        else continue;
        if (!b_greater) continue;
        bool violated = false;
        if (k + 1 > len_i) {
          violated = true;
        } else if (known(i, k + 1)) {
          violated = ka && value(i, k + 1) < value(j, k + 1);
        } else {
          violated = ka;
        }
        if (violated) {
          if (detail)
            *detail = "cells (" + std::to_string(i) + "," + std::to_string(k) + "), (" + std::to_string(i) + "," +
                      std::to_string(k + 1) + "), (" + std::to_string(j) + "," + std::to_string(k + 1) + ")";
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace detail

/// Checks the three reverse-composition-tableau rules on a filling given as
/// rows of non-inner entries. Malformed input (cell counts, entry multiset)
/// is reported as Rule::malformed rather than thrown.
inline Validation validate_tableau(const Composition& outer, const Composition& inner,
                                   const std::vector<std::vector<int>>& rows) {
  Tableau t;
  try {
    t = Tableau(outer, inner, rows);
  } catch (const invalid_input& e) {
    return {Rule::malformed, e.what()};
  }
  for (std::size_t r = 0; r < outer.length(); ++r) {
    for (int c = 1; c < outer[r]; ++c) {
      const int row = static_cast<int>(r) + 1;
      if (t.is_inner(row, c + 1)) continue;
      if (t.at(row, c) <= t.at(row, c + 1))
        return {Rule::row_decrease, "row " + std::to_string(row) + " at column " + std::to_string(c)};
    }
  }
  for (std::size_t r = 1; r < outer.length(); ++r) {
    const int row = static_cast<int>(r) + 1;
    if (t.is_inner(row - 1, 1) || t.is_inner(row, 1)) continue;
    if (t.at(row - 1, 1) >= t.at(row, 1))
      return {Rule::first_column, "rows " + std::to_string(row - 1) + " and " + std::to_string(row)};
  }
  std::string detail;
  if (!detail::triple_rule_consistent(
          outer, inner, [](int, int) { return true; }, [&](int r, int c) { return t.at(r, c); }, &detail))
    return {Rule::triple_rule, detail};
  return {};
}

inline Validation is_valid_srct(const Composition& shape, const std::vector<std::vector<int>>& rows) {
  return validate_tableau(shape, Composition{}, rows);
}

inline Validation is_valid(const Tableau& t) { return validate_tableau(t.shape(), t.inner(), t.rows()); }

/// Columns read top to bottom, left to right, as a permutation of {1..n}.
inline Permutation column_word(const Tableau& t) {
  std::vector<int> w;
  for (int c = 1; c <= t.shape().max_part(); ++c) {
    auto col = t.column(c);
    w.insert(w.end(), col.begin(), col.end());
  }
  return Permutation(std::move(w));
}

/// Per-column standardizations.
inline std::vector<std::vector<int>> standardized_column_word(const Tableau& t) {
  std::vector<std::vector<int>> out;
  for (int c = 1; c <= t.shape().max_part(); ++c) out.push_back(standardize(t.column(c)));
  return out;
}

/// {i : i+1 weakly right of i}
inline IndexSet descent_set(const Tableau& t) {
  IndexSet d;
  for (int i = 1; i < t.size(); ++i)
    if (t.position(i + 1).col >= t.position(i).col) d.insert(i);
  return d;
}

inline Composition descent_composition(const Tableau& t) { return comp_of(descent_set(t), t.size()); }

inline Tableau canonical_tableau(const Composition& a) {
  std::vector<std::vector<int>> rows;
  int x = 0;
  for (int part : a) {
    std::vector<int> row;
    for (int v = x + part; v > x; --v) row.push_back(v);
    rows.push_back(std::move(row));
    x += part;
  }
  return Tableau(a, rows);
}

/// Column of entry j, for j = 1..n.
inline std::vector<int> growth_word(const Tableau& t) {
  std::vector<int> w;
  for (int v = 1; v <= t.size(); ++v) w.push_back(t.position(v).col);
  return w;
}

/// Box-adding operator t_i; nullopt stands for the zero result.
inline std::optional<Composition> apply_box_adding(int i, const Composition& a) {
  if (i < 1) throw invalid_input("box-adding index must be positive");
  std::vector<int> parts = a.parts();
  if (i == 1) {
    parts.insert(parts.begin(), 1);
    return Composition(std::move(parts));
  }
  auto it = std::find(parts.begin(), parts.end(), i - 1);
  if (it == parts.end()) return std::nullopt;
  *it = i;
  return Composition(std::move(parts));
}

/// t_{w_1} ... t_{w_n} applied to `start`, rightmost letter first.
inline std::optional<Composition> apply_growth_word(const std::vector<int>& word, Composition start = {}) {
  std::optional<Composition> cur = std::move(start);
  for (auto it = word.rbegin(); it != word.rend() && cur; ++it) cur = apply_box_adding(*it, *cur);
  return cur;
}

/// Backtracking enumeration of outer//inner fillings, placing entries from n
/// down to 1. Partial states are pruned with the triple rule; every emitted
/// filling is fully re-validated. Output sorted by column word.
inline std::vector<Tableau> enumerate_fillings(const Composition& outer, const Composition& inner) {
  if (!fits_bottom_left(outer, inner)) throw invalid_input("inner shape does not fit in outer shape");
  const std::size_t len = outer.length();
  const int n = outer.size() - inner.size();
  // 0 = unfilled, infinity = inner cell
  std::vector<std::vector<int>> grid(len);
  std::vector<int> filled(len);
  for (std::size_t r = 0; r < len; ++r) {
    filled[r] = inner_length(outer, inner, r);
    grid[r].assign(static_cast<std::size_t>(outer[r]), 0);
    for (int c = 0; c < filled[r]; ++c) grid[r][static_cast<std::size_t>(c)] = Tableau::infinity;
  }
  auto known = [&](int r, int c) { return grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] != 0; };
  auto value = [&](int r, int c) { return grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]; };

  std::vector<std::pair<Permutation, Tableau>> found;
  auto emit = [&] {
    std::vector<std::vector<int>> rows(len);
    for (std::size_t r = 0; r < len; ++r)
      for (int v : grid[r])
        if (v != Tableau::infinity) rows[r].push_back(v);
    if (!validate_tableau(outer, inner, rows)) return;
    Tableau t(outer, inner, rows);
    found.emplace_back(column_word(t), std::move(t));
  };

  auto recurse = [&](auto&& self, int v) -> void {
    if (v == 0) {
      emit();
      return;
    }
    for (std::size_t r = 0; r < len; ++r) {
      const int c = filled[r];
      if (c >= outer[r]) continue;
      if (c == 0) {
        // first column entries increase downward: every row below must already be placed
        bool below_done = true;
        for (std::size_t s = r + 1; s < len && below_done; ++s) below_done = filled[s] > 0;
        if (!below_done) continue;
      }
      grid[r][static_cast<std::size_t>(c)] = v;
      ++filled[r];
      if (detail::triple_rule_consistent(outer, inner, known, value, nullptr)) self(self, v - 1);
      --filled[r];
      grid[r][static_cast<std::size_t>(c)] = 0;
    }
  };
  recurse(recurse, n);

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Tableau> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

inline std::vector<Tableau> enumerate_srct(const Composition& a) { return enumerate_fillings(a, Composition{}); }

inline std::vector<Tableau> enumerate_skew_srct(const SkewShapePair& shape) {
  if (!shape.valid())
    throw invalid_input("invalid skew shape " + shape.outer.to_string() + "//" + shape.inner.to_string());
  return enumerate_fillings(shape.outer, shape.inner);
}

/// Columns of removable nodes holding the minimum of their column.
inline IndexSet distinguished_removable_columns(const Tableau& t) {
  IndexSet out;
  for (const Cell& node : removable_parts(t.shape())) {
    auto col = t.column(node.col);
    if (!col.empty() && t.at(node.row, node.col) == *std::min_element(col.begin(), col.end())) out.insert(node.col);
  }
  return out;
}

/// Split a straight SRCT at m: the skew tableau of entries <= m and the
/// straight tableau of entries > m shifted down by m.
inline std::pair<Tableau, Tableau> split_at(const Tableau& t, int m) {
  if (t.is_skew()) throw invalid_input("split_at expects a straight-shape tableau");
  if (m < 0 || m > t.size()) throw invalid_input("split_at: m out of range");
  std::vector<int> inner_parts;
  std::vector<std::vector<int>> low_rows, high_rows;
  for (std::size_t r = 0; r < t.num_rows(); ++r) {
    std::vector<int> low, high;
    for (int c = 1; c <= t.shape()[r]; ++c) {
      const int v = t.at(static_cast<int>(r) + 1, c);
      (v > m ? high : low).push_back(v > m ? v - m : v);
    }
    low_rows.push_back(low);
    if (!high.empty()) {
      inner_parts.push_back(static_cast<int>(high.size()));
      high_rows.push_back(std::move(high));
    }
  }
  Composition beta(inner_parts);
  return {Tableau(t.shape(), beta, low_rows), Tableau(beta, high_rows)};
}

}  // namespace srct
