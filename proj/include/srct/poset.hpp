#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "srct/classes.hpp"

namespace srct {

/// A finite poset on permutations, given by its cover relation. Elements are
/// kept sorted so posets built by different routes compare directly.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// `covers` are (lower, upper) pairs of elements. When `graded` is set the
  /// rank function is l(sigma) - l(min), and each cover must raise it by one.
  FinitePoset(std::vector<Permutation> elements, const std::vector<std::pair<Permutation, Permutation>>& covers)
      : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    for (const auto& [lo, hi] : covers) covers_.emplace_back(index_of(lo), index_of(hi));
    std::sort(covers_.begin(), covers_.end());
    covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
    compute_ranks();
  }

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const noexcept { return covers_; }
  bool graded() const noexcept { return graded_; }
  const std::vector<int>& ranks() const noexcept { return ranks_; }

  std::size_t index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p) throw invalid_input("permutation " + p.to_string() + " is not an element");
    return static_cast<std::size_t>(it - elements_.begin());
  }

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.elements_ == b.elements_ && a.covers_ == b.covers_;
  }

  /// Whether the cover graph has a directed cycle.
  bool has_cycle() const {
    std::vector<int> indeg(size(), 0);
    for (auto [lo, hi] : covers_) ++indeg[hi];
    std::deque<std::size_t> q;
    for (std::size_t v = 0; v < size(); ++v)
      if (indeg[v] == 0) q.push_back(v);
    std::size_t seen = 0;
    auto up = upward();
    while (!q.empty()) {
      auto v = q.front();
      q.pop_front();
      ++seen;
      for (auto w : up[v])
        if (--indeg[w] == 0) q.push_back(w);
    }
    return seen != size();
  }

  /// leq[a][b] iff a <= b (reflexive-transitive closure of the covers).
  std::vector<std::vector<bool>> order_matrix() const {
    const std::size_t n = size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    auto up = upward();
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::size_t> stack{s};
      leq[s][s] = true;
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : up[v])
          if (!leq[s][w]) {
            leq[s][w] = true;
            stack.push_back(w);
          }
      }
    }
    return leq;
  }

  std::optional<std::size_t> bottom() const { return extreme(false); }
  std::optional<std::size_t> top() const { return extreme(true); }

  /// Exhaustive meet/join existence check over all pairs.
  bool is_lattice() const {
    if (size() == 0) return false;
    const auto leq = order_matrix();
    const std::size_t n = size();
    auto has_least = [&](const std::vector<std::size_t>& set, bool upper) {
      for (auto c : set) {
        bool all = std::all_of(set.begin(), set.end(), [&](std::size_t d) { return upper ? leq[c][d] : leq[d][c]; });
        if (all) return true;
      }
      return false;
    };
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        std::vector<std::size_t> ub, lb;
        for (std::size_t c = 0; c < n; ++c) {
          if (leq[a][c] && leq[b][c]) ub.push_back(c);
          if (leq[c][a] && leq[c][b]) lb.push_back(c);
        }
        if (!has_least(ub, true) || !has_least(lb, false)) return false;
      }
    }
    return true;
  }

  /// Number of elements of each rank. Requires a graded poset.
  std::vector<int> rank_vector() const {
    if (!graded_) throw invalid_input("rank_vector: poset is not graded");
    std::vector<int> v;
    for (int r : ranks_) {
      if (static_cast<std::size_t>(r) >= v.size()) v.resize(static_cast<std::size_t>(r) + 1, 0);
      ++v[static_cast<std::size_t>(r)];
    }
    return v;
  }

  bool is_rank_symmetric() const {
    auto v = rank_vector();
    return std::equal(v.begin(), v.end(), v.rbegin());
  }

  bool is_rank_unimodal() const {
    auto v = rank_vector();
    std::size_t i = 0;
    while (i + 1 < v.size() && v[i] <= v[i + 1]) ++i;
    while (i + 1 < v.size() && v[i] >= v[i + 1]) ++i;
    return i + 1 >= v.size();
  }

  std::string to_dot(const std::string& name = "poset") const {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < size(); ++i) {
      os << "  n" << i << " [label=\"" << elements_[i].to_string() << "\"";
      if (graded_) os << ", rank=" << ranks_[i];
      os << "];\n";
    }
    for (auto [lo, hi] : covers_) os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
  }

 private:
  std::vector<std::vector<std::size_t>> upward() const {
    std::vector<std::vector<std::size_t>> up(size());
    for (auto [lo, hi] : covers_) up[lo].push_back(hi);
    return up;
  }

  std::optional<std::size_t> extreme(bool want_top) const {
    std::vector<bool> has_up(size(), false), has_down(size(), false);
    for (auto [lo, hi] : covers_) {
      has_up[lo] = true;
      has_down[hi] = true;
    }
    std::optional<std::size_t> hit;
    for (std::size_t v = 0; v < size(); ++v) {
      if ((want_top ? has_up[v] : has_down[v])) continue;
      if (hit) return std::nullopt;
      hit = v;
    }
    return hit;
  }

  void compute_ranks() {
    ranks_.assign(size(), 0);
    graded_ = false;
    auto b = bottom();
    if (!b || has_cycle()) return;
    const int base = elements_[*b].length();
    for (std::size_t v = 0; v < size(); ++v) ranks_[v] = elements_[v].length() - base;
    graded_ = std::all_of(covers_.begin(), covers_.end(),
                          [&](auto c) { return ranks_[c.second] == ranks_[c.first] + 1; }) &&
              std::all_of(ranks_.begin(), ranks_.end(), [](int r) { return r >= 0; });
  }

  std::vector<Permutation> elements_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<int> ranks_;
  bool graded_ = false;
};

/// The flip order on a class, labelled by column words. Covers are the
/// non-attacking descent flips.
inline FinitePoset flip_poset(const std::vector<Tableau>& members) {
  std::vector<Permutation> elements;
  std::vector<std::pair<Permutation, Permutation>> covers;
  for (const auto& t : members) {
    const Permutation w = column_word(t);
    elements.push_back(w);
    for (int i = 1; i < t.size(); ++i) {
      FlipResult r = pi(i, t);
      if (r.kind() == FlipResult::Kind::swapped) covers.emplace_back(w, column_word(r.tableau()));
    }
  }
  return FinitePoset(std::move(elements), covers);
}

inline FinitePoset flip_poset(const SrctClass& cls) { return flip_poset(cls.members); }

/// The interval [lo, hi] in left weak order, covers sigma -> s_i sigma.
inline FinitePoset bruhat_interval(const Permutation& lo, const Permutation& hi) {
  if (!bruhat_leq(lo, hi)) throw invalid_input("bruhat_interval: endpoints are incomparable");
  std::set<Permutation> seen{lo};
  std::deque<Permutation> queue{lo};
  std::vector<std::pair<Permutation, Permutation>> covers;
  while (!queue.empty()) {
    Permutation cur = queue.front();
    queue.pop_front();
    for (int i = 1; i < cur.degree(); ++i) {
      if (cur.is_left_descent(i)) continue;
      Permutation up = cur.left_multiply(i);
      if (!bruhat_leq(up, hi)) continue;
      covers.emplace_back(cur, up);
      if (seen.insert(up).second) queue.push_back(up);
    }
  }
  return FinitePoset(std::vector<Permutation>(seen.begin(), seen.end()), covers);
}

/// Whether tau -> col(tau) maps the class onto [col(source), col(sink)] with
/// covers going to covers in both directions.
inline bool verify_interval_iso(const SrctClass& cls) {
  const FinitePoset flips = flip_poset(cls);
  const FinitePoset interval = bruhat_interval(column_word(cls.source), column_word(cls.sink));
  return flips.size() == cls.members.size() && flips == interval;
}

struct RankRecord {
  Composition shape;
  std::string class_key;
  std::size_t size = 0;
  std::vector<int> ranks;
  bool symmetric = false;
  bool unimodal = false;
};

/// Rank vectors of every class poset for all compositions of 1..max_n, in
/// composition order then class order.
inline std::vector<RankRecord> rank_sweep(int max_n) {
  std::vector<RankRecord> out;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& a : compositions_of(n)) {
      for (const auto& cls : equivalence_classes(a)) {
        const FinitePoset p = flip_poset(cls);
        RankRecord r{a, cls.key(), p.size(), p.rank_vector(), p.is_rank_symmetric(), p.is_rank_unimodal()};
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

}  // namespace srct
