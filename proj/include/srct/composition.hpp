#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace srct {

/// Raised when a caller violates a documented precondition (bad shape,
/// size mismatch, out-of-range index).
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive check finds a structural counterexample that the
/// theory rules out (e.g. two sources in one class).
class verification_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordered list of positive integers. Doubles as a reverse composition
/// diagram: row i (from the top) holds parts[i] left-justified cells.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
      if (p < 1) throw invalid_input("composition parts must be positive");
    }
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int max_part() const noexcept {
    return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end());
  }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

  /// Comma-separated parts; the empty composition is the empty string.
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  /// Inverse of to_string. Whitespace around parts is tolerated; errors name
  /// the character offset of the offending token.
  static Composition parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t'; };
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos == text.size()) return {};
    while (true) {
      while (pos < text.size() && is_space(text[pos])) ++pos;
      std::size_t start = pos;
      long value = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) throw invalid_input("part too large at position " + std::to_string(start));
        ++pos;
      }
      if (pos == start) throw invalid_input("expected a positive integer at position " + std::to_string(start));
      if (value == 0) throw invalid_input("part must be positive at position " + std::to_string(start));
      parts.push_back(static_cast<int>(value));
      while (pos < text.size() && is_space(text[pos])) ++pos;
      if (pos == text.size()) break;
      if (text[pos] != ',') throw invalid_input("expected ',' at position " + std::to_string(pos));
      ++pos;
    }
    return Composition(std::move(parts));
  }

 private:
  std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Composition& a) {
  return os << '(' << a.to_string() << ')';
}

using IndexSet = std::set<int>;

/// {a1, a1+a2, ..., a1+...+a_{k-1}}
inline IndexSet set_of(const Composition& a) {
  IndexSet s;
  int run = 0;
  for (std::size_t i = 0; i + 1 < a.length(); ++i) {
    run += a[i];
    s.insert(run);
  }
  return s;
}

inline Composition comp_of(const IndexSet& s, int n) {
  if (n < 0) throw invalid_input("comp_of: negative size");
  if (n == 0) {
    if (!s.empty()) throw invalid_input("comp_of: nonempty set for n = 0");
    return {};
  }
  std::vector<int> parts;
  int prev = 0;
  for (int x : s) {
    if (x <= 0 || x >= n) throw invalid_input("comp_of: element " + std::to_string(x) + " outside [n-1]");
    parts.push_back(x - prev);
    prev = x;
  }
  parts.push_back(n - prev);
  return Composition(std::move(parts));
}

/// A removable node, 1-based: the last cell (row, parts[row-1]) of a row.
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::vector<Cell> removable_parts(const Composition& a) {
  if (a.empty()) throw invalid_input("removable_parts: empty composition");
  std::vector<Cell> out;
  for (std::size_t i = 0; i < a.length(); ++i) {
    bool ok = (i == 0);
    if (!ok && a[i] >= 2) {
      ok = std::none_of(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i),
                        [&](int p) { return p == a[i] - 1; });
    }
    if (ok) out.push_back({static_cast<int>(i) + 1, a[i]});
  }
  return out;
}

/// The composition obtained by deleting the removable node of `row` (1-based);
/// a part that drops to zero disappears.
inline Composition remove_node(const Composition& a, int row) {
  std::vector<int> parts = a.parts();
  auto& p = parts.at(static_cast<std::size_t>(row - 1));
  if (--p == 0) parts.erase(parts.begin() + (row - 1));
  return Composition(std::move(parts));
}

inline bool is_simple(const Composition& a) {
  const auto len = a.length();
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      if (a[i] >= a[j] && a[j] >= 2) {
        bool found = false;
        for (std::size_t k = i + 1; k < j && !found; ++k) found = (a[k] == a[j] - 1);
        if (!found) return false;
      }
    }
  }
  return true;
}

inline Composition underlying_partition(const Composition& a) {
  std::vector<int> p = a.parts();
  std::sort(p.begin(), p.end(), std::greater<>());
  return Composition(std::move(p));
}

/// The total order used for transition matrices: compare underlying partitions
/// lexicographically, then the compositions themselves. `greater` means a ▶ b.
inline std::strong_ordering cmp_btr(const Composition& a, const Composition& b) {
  if (a.size() != b.size()) throw invalid_input("cmp_btr: compositions of different sizes");
  if (auto c = underlying_partition(a).parts() <=> underlying_partition(b).parts(); c != 0) return c;
  return a.parts() <=> b.parts();
}

/// Sort descending under ▶.
inline void sort_btr_descending(std::vector<Composition>& v) {
  std::sort(v.begin(), v.end(), [](const Composition& a, const Composition& b) { return cmp_btr(a, b) > 0; });
}

/// Covers in the reverse composition poset: prefix a 1, or increment a part
/// that is the leftmost part of its size. Sorted, deduplicated.
inline std::vector<Composition> lc_covers(const Composition& a) {
  std::vector<Composition> out;
  std::vector<int> pre{1};
  pre.insert(pre.end(), a.begin(), a.end());
  out.emplace_back(std::move(pre));
  for (std::size_t k = 0; k < a.length(); ++k) {
    bool leftmost = std::none_of(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k),
                                 [&](int p) { return p == a[k]; });
    if (!leftmost) continue;
    std::vector<int> up = a.parts();
    ++up[k];
    out.emplace_back(std::move(up));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

// Everything reachable upward from `from` without exceeding size `bound`.
inline const std::set<Composition>& lc_upset(const Composition& from, int bound) {
  static std::mutex mu;
  static std::map<std::pair<Composition, int>, std::set<Composition>> memo;
  std::lock_guard lock(mu);
  auto key = std::make_pair(from, bound);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::set<Composition> seen{from};
  std::vector<Composition> frontier{from};
  while (!frontier.empty()) {
    std::vector<Composition> next;
    for (const auto& c : frontier) {
      if (c.size() >= bound) continue;
      for (auto& up : lc_covers(c)) {
        if (seen.insert(up).second) next.push_back(std::move(up));
      }
    }
    frontier = std::move(next);
  }
  return memo.emplace(std::move(key), std::move(seen)).first->second;
}

}  // namespace detail

/// beta <=_c alpha in the reverse composition poset.
inline bool lc_leq(const Composition& beta, const Composition& alpha) {
  if (beta.size() > alpha.size()) return false;
  return detail::lc_upset(beta, alpha.size()).contains(alpha);
}

/// (b, b+1, ..., a)
inline Composition delta_interval(int a, int b) {
  if (b < 1 || a < b) throw invalid_input("delta_interval: need a >= b >= 1");
  std::vector<int> p;
  for (int x = b; x <= a; ++x) p.push_back(x);
  return Composition(std::move(p));
}

/// All compositions of n, ordered lexicographically by parts.
inline std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw invalid_input("compositions_of: negative size");
  if (n == 0) return {Composition{}};
  std::vector<Composition> out;
  out.reserve(std::size_t{1} << (n - 1));
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    IndexSet s;
    for (int i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) s.insert(i);
    out.push_back(comp_of(s, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Partitions of n in weakly decreasing part order.
inline std::vector<Composition> partitions_of(int n) {
  std::vector<Composition> out;
  for (auto& c : compositions_of(n)) {
    if (std::is_sorted(c.begin(), c.end(), std::greater<>())) out.push_back(c);
  }
  return out;
}

inline bool is_strict_reverse_partition(const Composition& a) {
  return std::adjacent_find(a.begin(), a.end(), std::greater_equal<>()) == a.end();
}

/// Strictly increasing compositions of n.
inline std::vector<Composition> strict_reverse_partitions_of(int n) {
  std::vector<Composition> out;
  for (auto& c : compositions_of(n)) {
    if (is_strict_reverse_partition(c)) out.push_back(c);
  }
  return out;
}

/// A skew reverse composition shape outer//inner, inner drawn bottom-left.
struct SkewShapePair {
  Composition outer;
  Composition inner;

  int size() const { return outer.size() - inner.size(); }
  bool valid() const { return lc_leq(inner, outer); }
  friend bool operator==(const SkewShapePair&, const SkewShapePair&) = default;
};

}  // namespace srct
