#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "srct/composition.hpp"

namespace srct {

/// A permutation of {1..n} in one-line notation. Composition is functional:
/// (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<bool> seen(w_.size() + 1, false);
    for (int v : w_) {
      if (v < 1 || v > static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(v)])
        throw invalid_input("permutation: not a bijection onto {1..n}");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(w));
  }

  int degree() const noexcept { return static_cast<int>(w_.size()); }
  const std::vector<int>& one_line() const noexcept { return w_; }
  /// sigma(p), 1-based.
  int operator()(int p) const { return w_[static_cast<std::size_t>(p - 1)]; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.w_ <=> b.w_; }

  /// Pairs (p, q), p < q, with sigma(p) > sigma(q).
  std::vector<std::pair<int, int>> inversions() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t p = 0; p < w_.size(); ++p)
      for (std::size_t q = p + 1; q < w_.size(); ++q)
        if (w_[p] > w_[q]) out.emplace_back(static_cast<int>(p) + 1, static_cast<int>(q) + 1);
    return out;
  }

  int length() const {
    int l = 0;
    for (std::size_t p = 0; p < w_.size(); ++p)
      for (std::size_t q = p + 1; q < w_.size(); ++q) l += (w_[p] > w_[q]);
    return l;
  }

  Permutation inverse() const {
    std::vector<int> inv(w_.size());
    for (std::size_t p = 0; p < w_.size(); ++p) inv[static_cast<std::size_t>(w_[p] - 1)] = static_cast<int>(p) + 1;
    return Permutation(std::move(inv));
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw invalid_input("permutation product: degree mismatch");
    std::vector<int> out(b.w_.size());
    for (std::size_t p = 0; p < b.w_.size(); ++p) out[p] = a(b.w_[p]);
    return Permutation(std::move(out));
  }

  /// s_i * sigma: swaps the values i and i+1 in the one-line word.
  Permutation left_multiply(int i) const {
    check_generator(i);
    std::vector<int> out = w_;
    for (int& v : out) {
      if (v == i) v = i + 1;
      else if (v == i + 1) v = i;
    }
    return Permutation(std::move(out));
  }

  /// l(s_i * sigma) < l(sigma), i.e. i+1 appears before i.
  bool is_left_descent(int i) const {
    check_generator(i);
    auto pi = std::find(w_.begin(), w_.end(), i);
    auto pj = std::find(w_.begin(), w_.end(), i + 1);
    return pj < pi;
  }

  /// A reduced word i_1 ... i_p with sigma = s_{i_1} * ... * s_{i_p}, taking
  /// the smallest left descent at every step.
  std::vector<int> reduced_word() const {
    std::vector<int> word;
    Permutation cur = *this;
    for (int l = cur.length(); l > 0; --l) {
      for (int i = 1; i < degree(); ++i) {
        if (cur.is_left_descent(i)) {
          word.push_back(i);
          cur = cur.left_multiply(i);
          break;
        }
      }
    }
    return word;
  }

  /// Every reduced word, lexicographically sorted.
  std::vector<std::vector<int>> all_reduced_words() const {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    collect_reduced_words(*this, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// s_{i_1} * ... * s_{i_p} as a permutation of {1..n}.
  static Permutation from_word(int n, const std::vector<int>& word) {
    Permutation p = identity(n);
    for (auto it = word.rbegin(); it != word.rend(); ++it) p = p.left_multiply(*it);
    return p;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(w_[i]);
    }
    return s;
  }

 private:
  void check_generator(int i) const {
    if (i < 1 || i >= degree()) throw invalid_input("generator index " + std::to_string(i) + " out of range");
  }

  static void collect_reduced_words(const Permutation& cur, std::vector<int>& prefix,
                                    std::vector<std::vector<int>>& out) {
    bool any = false;
    for (int i = 1; i < cur.degree(); ++i) {
      if (!cur.is_left_descent(i)) continue;
      any = true;
      prefix.push_back(i);
      collect_reduced_words(cur.left_multiply(i), prefix, out);
      prefix.pop_back();
    }
    if (!any) out.push_back(prefix);
  }

  std::vector<int> w_;
};

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

/// Left weak order: Inv(a) contained in Inv(b).
inline bool bruhat_leq(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw invalid_input("bruhat_leq: degree mismatch");
  auto ia = a.inversions();
  auto ib = b.inversions();
  return std::includes(ib.begin(), ib.end(), ia.begin(), ia.end());
}

/// Standardization of a word of distinct integers.
inline std::vector<int> standardize(const std::vector<int>& word) {
  std::vector<int> sorted = word;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  out.reserve(word.size());
  for (int v : word) out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
  return out;
}

}  // namespace srct
