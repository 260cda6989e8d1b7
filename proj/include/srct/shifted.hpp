#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "srct/classes.hpp"
#include "srct/linalg.hpp"

namespace srct {

/// Shifted reverse diagram of a strict reverse partition alpha, optionally
/// truncated by beta. Row i (1-based, of k) starts in column k - i + 1; the
/// last s rows lose beta_{i+s-k} cells from their right ends.
class ShiftedShape {
 public:
  ShiftedShape() = default;

  explicit ShiftedShape(Composition alpha, Composition beta = {}) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (!is_strict_reverse_partition(alpha_)) throw invalid_input("shifted shape " + alpha_.to_string() + " is not strictly increasing");
    if (!beta_.empty() && !is_strict_reverse_partition(beta_))
      throw invalid_input("truncation " + beta_.to_string() + " is not strictly increasing");
    const std::size_t k = alpha_.length(), s = beta_.length();
    if (s > k) throw invalid_input("truncation has more rows than the shape");
    for (std::size_t i = 1; i <= s; ++i)
      if (beta_[s - i] > alpha_[k - i]) throw invalid_input("truncation does not fit");
    for (std::size_t i = 0; i < k; ++i) {
      const int start = static_cast<int>(k - i);
      const int cut = i + s >= k ? beta_[i + s - k] : 0;
      lengths_.push_back(alpha_[i] - cut);
      starts_.push_back(start);
      for (int c = 0; c < lengths_.back(); ++c) cells_.insert({static_cast<int>(i) + 1, start + c});
    }
  }

  const Composition& alpha() const noexcept { return alpha_; }
  const Composition& truncation() const noexcept { return beta_; }
  bool truncated() const noexcept { return !beta_.empty(); }
  const std::set<Cell>& cells() const noexcept { return cells_; }
  int size() const noexcept { return static_cast<int>(cells_.size()); }
  std::size_t num_rows() const noexcept { return alpha_.length(); }
  int row_start(int row) const { return starts_.at(static_cast<std::size_t>(row - 1)); }
  int row_length(int row) const { return lengths_.at(static_cast<std::size_t>(row - 1)); }
  bool contains(Cell c) const { return cells_.contains(c); }

  std::string to_string() const { return truncated() ? alpha_.to_string() + "\\" + beta_.to_string() : alpha_.to_string(); }

 private:
  Composition alpha_, beta_;
  std::vector<int> starts_, lengths_;
  std::set<Cell> cells_;
};

/// A filling; rows are listed left to right.
struct ShiftedTableau {
  ShiftedShape shape;
  std::vector<std::vector<int>> rows;

  int at(Cell c) const {
    return rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - shape.row_start(c.row))];
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r) s += " / ";
      for (std::size_t c = 0; c < rows[r].size(); ++c) s += (c ? " " : "") + std::to_string(rows[r][c]);
    }
    return s;
  }

  friend bool operator==(const ShiftedTableau& a, const ShiftedTableau& b) { return a.rows == b.rows; }
  friend bool operator<(const ShiftedTableau& a, const ShiftedTableau& b) { return a.rows < b.rows; }
};

/// Rows decrease rightward, columns increase downward, entries are 1..n.
inline bool is_valid_shifted(const ShiftedTableau& t) {
  const ShiftedShape& sh = t.shape;
  if (t.rows.size() != sh.num_rows()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(sh.size()) + 1, false);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (static_cast<int>(t.rows[r].size()) != sh.row_length(static_cast<int>(r) + 1)) return false;
    for (int v : t.rows[r]) {
      if (v < 1 || v > sh.size() || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  for (const Cell& c : sh.cells()) {
    if (sh.contains({c.row, c.col + 1}) && t.at(c) <= t.at({c.row, c.col + 1})) return false;
    for (int below = c.row + 1; below <= static_cast<int>(sh.num_rows()); ++below)
      if (sh.contains({below, c.col}) && t.at(c) >= t.at({below, c.col})) return false;
  }
  return true;
}

namespace detail {

// Places n, n-1, ..., 1; a cell is available once every cell left of it in
// its row and below it in its column holds a larger entry.
template <typename Visit>
void fill_shifted(const ShiftedShape& sh, Visit visit) {
  const std::vector<Cell> cells(sh.cells().begin(), sh.cells().end());
  std::vector<std::vector<std::size_t>> needs(cells.size());
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = 0; b < cells.size(); ++b) {
      const bool left = cells[b].row == cells[a].row && cells[b].col < cells[a].col;
      const bool below = cells[b].col == cells[a].col && cells[b].row > cells[a].row;
      if (left || below) needs[a].push_back(b);
    }
  std::vector<int> value(cells.size(), 0);
  auto recurse = [&](auto&& self, int v) -> void {
    if (v == 0) {
      visit(cells, value);
      return;
    }
    for (std::size_t a = 0; a < cells.size(); ++a) {
      if (value[a] != 0) continue;
      if (!std::all_of(needs[a].begin(), needs[a].end(), [&](std::size_t b) { return value[b] != 0; })) continue;
      value[a] = v;
      self(self, v - 1);
      value[a] = 0;
    }
  };
  recurse(recurse, sh.size());
}

}  // namespace detail

inline std::vector<ShiftedTableau> enumerate_shifted(const ShiftedShape& sh) {
  std::vector<ShiftedTableau> out;
  detail::fill_shifted(sh, [&](const std::vector<Cell>& cells, const std::vector<int>& value) {
    ShiftedTableau t{sh, std::vector<std::vector<int>>(sh.num_rows())};
    for (std::size_t r = 0; r < sh.num_rows(); ++r) t.rows[r].resize(static_cast<std::size_t>(sh.row_length(static_cast<int>(r) + 1)));
    for (std::size_t a = 0; a < cells.size(); ++a)
      t.rows[static_cast<std::size_t>(cells[a].row - 1)][static_cast<std::size_t>(cells[a].col - sh.row_start(cells[a].row))] = value[a];
    out.push_back(std::move(t));
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t count_shifted(const ShiftedShape& sh) {
  std::size_t n = 0;
  detail::fill_shifted(sh, [&](const auto&, const auto&) { ++n; });
  return n;
}

/// The left shift of a straight tableau: row i moves i - 1 cells left, so the
/// composition cell (i, j) lands on the shifted cell (i, j + k - i).
inline ShiftedTableau left_shift(const Tableau& t) {
  return ShiftedTableau{ShiftedShape(t.shape()), t.rows()};
}

inline Tableau right_shift(const ShiftedTableau& s) { return Tableau(s.shape.alpha(), s.rows); }

struct ClassBijection {
  Composition alpha;
  std::vector<std::pair<Tableau, ShiftedTableau>> pairs;
};

/// Matches E_alpha with the shifted reverse tableaux of shape alpha in both
/// directions. Throws verification_failure on any mismatch.
inline ClassBijection class_bijection(const Composition& alpha) {
  if (!is_strict_reverse_partition(alpha)) throw invalid_input("class_bijection: " + alpha.to_string() + " is not strictly increasing");
  ClassBijection out{alpha, {}};
  const SrctClass e = canonical_class(alpha);
  const std::vector<ShiftedTableau> shifted = enumerate_shifted(ShiftedShape(alpha));
  std::set<ShiftedTableau> images;
  for (const auto& t : e.members) {
    ShiftedTableau s = left_shift(t);
    if (!is_valid_shifted(s)) throw verification_failure("left shift is not a shifted reverse tableau: " + t.to_string());
    if (!images.insert(s).second) throw verification_failure("left shift is not injective at " + t.to_string());
    out.pairs.emplace_back(t, std::move(s));
  }
  for (const auto& s : shifted) {
    if (!images.contains(s)) throw verification_failure("shifted tableau not hit: " + s.to_string());
    const Tableau back = right_shift(s);
    if (!is_valid(back) || !e.contains(back)) throw verification_failure("right shift leaves E_alpha: " + s.to_string());
  }
  if (images.size() != shifted.size()) throw verification_failure("image contains non-tableaux for " + alpha.to_string());
  return out;
}

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0 || a % b != 0) throw verification_failure("non-exact division " + a.str() + " / " + b.str());
  return a / b;
}

inline BigInt catalan(int m) { return exact_div(binomial(2 * m, m), BigInt(m + 1)); }

/// g_m = binom(m+1, 2)! / prod_{0 <= i < j <= m} (i + j), the number of shifted
/// reverse tableaux of staircase shape (1, 2, ..., m).
inline BigInt staircase_count(int m) {
  if (m < 1) throw invalid_input("staircase_count: m must be positive");
  BigInt den = 1;
  for (int j = 1; j <= m; ++j)
    for (int i = 0; i < j; ++i) den *= i + j;
  return exact_div(factorial(m * (m + 1) / 2), den);
}

enum class Family { threes, staircase_double, rectangle };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::threes: return "threes";
    case Family::staircase_double: return "staircase_double";
    case Family::rectangle: return "rectangle";
  }
  return "?";
}

struct CountReport {
  Family family = Family::threes;
  std::vector<int> parameter;
  Composition shape;            // alpha whose E_alpha is counted
  std::optional<ShiftedShape> truncated;
  BigInt formula;
  BigInt enumerated;            // |E_alpha|
  std::optional<BigInt> truncated_count;
  bool match() const { return formula == enumerated && (!truncated_count || *truncated_count == enumerated); }
};

/// threes(k): |E_{(3^k)}| against 2^{k-1} and the truncated shape
/// delta_[k+2,3] \ delta_{k-1}.
/// staircase_double(n): |E_{(1,...,n,n)}| against g_{n+1} C_{n+1} C_{n-1} / (2 C_{2n-1})
/// and delta_{n+1} \ delta_1.
/// rectangle(n, k): |E_{(n^k)}| against delta_[n+k-1,n] \ delta_{k-1}.
inline CountReport count_formulas(Family family, const std::vector<int>& parameter) {
  CountReport rep;
  rep.family = family;
  rep.parameter = parameter;
  auto need = [&](std::size_t count) {
    if (parameter.size() != count) throw invalid_input(std::string(family_name(family)) + " takes " + std::to_string(count) + " parameter(s)");
    for (int p : parameter)
      if (p < 1) throw invalid_input("count parameters must be positive");
  };
  auto truncated_by = [](Composition a, int s) {
    return s == 0 ? ShiftedShape(std::move(a)) : ShiftedShape(std::move(a), delta_interval(s, 1));
  };
  switch (family) {
    case Family::threes: {
      need(1);
      const int k = parameter[0];
      rep.shape = Composition(std::vector<int>(static_cast<std::size_t>(k), 3));
      rep.formula = BigInt(1) << (k - 1);
      rep.truncated = truncated_by(delta_interval(k + 2, 3), k - 1);
      break;
    }
    case Family::staircase_double: {
      need(1);
      const int n = parameter[0];
      std::vector<int> parts;
      for (int i = 1; i <= n; ++i) parts.push_back(i);
      parts.push_back(n);
      rep.shape = Composition(parts);
      rep.formula = exact_div(staircase_count(n + 1) * catalan(n + 1) * catalan(n - 1), 2 * catalan(2 * n - 1));
      rep.truncated = ShiftedShape(delta_interval(n + 1, 1), Composition{1});
      break;
    }
    case Family::rectangle: {
      need(2);
      const int n = parameter[0], k = parameter[1];
      rep.shape = Composition(std::vector<int>(static_cast<std::size_t>(k), n));
      rep.truncated = truncated_by(delta_interval(n + k - 1, n), k - 1);
      break;
    }
  }
  rep.truncated_count = BigInt(count_shifted(*rep.truncated));
  if (family == Family::rectangle) rep.formula = *rep.truncated_count;
  rep.enumerated = BigInt(canonical_class(rep.shape).members.size());
  return rep;
}

}  // namespace srct
