#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "srct/classes.hpp"

namespace srct {

struct FundamentalBasis {
  static constexpr const char* symbol = "F";
};
struct MonomialBasis {
  static constexpr const char* symbol = "M";
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("quasisymmetric coefficient overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("quasisymmetric coefficient overflow");
  return r;
}

}  // namespace detail

/// A homogeneous quasisymmetric function of degree n as a finitely supported
/// integer vector over one basis. Zero coefficients are never stored.
template <typename Basis>
class QuasiSym {
 public:
  explicit QuasiSym(int degree = 0) : degree_(degree) {}

  /// The unit 1 = F_() = M_().
  static QuasiSym one() {
    QuasiSym q(0);
    q.add(Composition{}, 1);
    return q;
  }

  int degree() const noexcept { return degree_; }
  const std::map<Composition, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::int64_t coefficient(const Composition& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const Composition& a, std::int64_t c) {
    if (a.size() != degree_)
      throw invalid_input("term " + a.to_string() + " has degree " + std::to_string(a.size()) + ", expected " +
                          std::to_string(degree_));
    if (c == 0) return;
    auto& slot = terms_[a];
    slot = detail::checked_add(slot, c);
    if (slot == 0) terms_.erase(a);
  }

  QuasiSym& operator+=(const QuasiSym& o) {
    if (o.degree_ != degree_ && !o.is_zero() && !is_zero()) throw invalid_input("adding functions of different degree");
    if (is_zero()) degree_ = o.degree_;
    for (const auto& [a, c] : o.terms_) add(a, c);
    return *this;
  }
  friend QuasiSym operator+(QuasiSym a, const QuasiSym& b) { return a += b; }

  friend bool operator==(const QuasiSym& a, const QuasiSym& b) {
    return a.terms_ == b.terms_ && (a.degree_ == b.degree_ || a.is_zero());
  }

  /// Sum of all coefficients.
  std::int64_t mass() const {
    std::int64_t m = 0;
    for (const auto& [a, c] : terms_) m = detail::checked_add(m, c);
    return m;
  }

  /// Terms with indices sorted descending by the ▶ order.
  std::vector<std::pair<Composition, std::int64_t>> sorted_terms() const {
    std::vector<std::pair<Composition, std::int64_t>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return cmp_btr(x.first, y.first) > 0; });
    return v;
  }

  /// "F(2,1,3) + F(2,2,2) + 2*F(1,2,1,2)"
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& [a, c] : sorted_terms()) {
      if (!s.empty()) s += " + ";
      if (c != 1) s += std::to_string(c) + "*";
      s += std::string(Basis::symbol) + "(" + a.to_string() + ")";
    }
    return s;
  }

 private:
  int degree_;
  std::map<Composition, std::int64_t> terms_;
};

using QSymF = QuasiSym<FundamentalBasis>;
using QSymM = QuasiSym<MonomialBasis>;

/// F_alpha = sum of M_beta over beta with set(beta) containing set(alpha).
inline QSymM fundamental_to_monomial(const Composition& a) {
  const int n = a.size();
  QSymM out(n);
  if (n == 0) {
    out.add(a, 1);
    return out;
  }
  const IndexSet base = set_of(a);
  std::vector<int> free;
  for (int i = 1; i < n; ++i)
    if (!base.contains(i)) free.push_back(i);
  for (unsigned long mask = 0; mask < (1ul << free.size()); ++mask) {
    IndexSet s = base;
    for (std::size_t b = 0; b < free.size(); ++b)
      if (mask & (1ul << b)) s.insert(free[b]);
    out.add(comp_of(s, n), 1);
  }
  return out;
}

inline QSymM to_monomial(const QSymF& f) {
  QSymM out(f.degree());
  for (const auto& [a, c] : f.terms()) {
    const QSymM expanded = fundamental_to_monomial(a);
    for (const auto& [b, d] : expanded.terms()) out.add(b, detail::checked_mul(c, d));
  }
  return out;
}

/// Sum of F_{comp(tau)} over the given tableaux (all of one size).
inline QSymF descent_generating_function(const std::vector<Tableau>& tableaux, int degree) {
  QSymF out(degree);
  for (const auto& t : tableaux) out.add(descent_composition(t), 1);
  return out;
}

inline QSymF quasisymmetric_schur(const Composition& a) {
  return descent_generating_function(enumerate_srct(a), a.size());
}

inline QSymF canonical_qsym(const Composition& a) {
  return descent_generating_function(canonical_class(a).members, a.size());
}

inline QSymF skew_quasisymmetric_schur(const SkewShapePair& shape) {
  if (shape.inner == shape.outer) return QSymF::one();
  return descent_generating_function(enumerate_skew_srct(shape), shape.size());
}

namespace detail {

// Semistandard Young tableaux of partition shape `lambda` (English, rows
// weakly increasing, columns strictly increasing) with content `mu`.
inline std::int64_t count_ssyt(const Composition& lambda, const Composition& mu) {
  const std::size_t rows = lambda.length();
  std::vector<std::vector<int>> grid(rows);
  for (std::size_t r = 0; r < rows; ++r) grid[r].assign(static_cast<std::size_t>(lambda[r]), 0);
  std::vector<int> remaining(mu.begin(), mu.end());
  const int letters = static_cast<int>(mu.length());
  std::int64_t count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < grid[r].size(); ++c) cells.emplace_back(r, c);
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, grid[r][c - 1]);
    if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
    for (int v = lo; v <= letters; ++v) {
      if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
      --remaining[static_cast<std::size_t>(v - 1)];
      grid[r][c] = v;
      self(self, k + 1);
      ++remaining[static_cast<std::size_t>(v - 1)];
    }
    grid[r][c] = 0;
  };
  recurse(recurse, 0);
  return count;
}

}  // namespace detail

/// s_lambda in the monomial basis, by direct SSYT counting per content.
inline QSymM schur_monomial_oracle(const Composition& lambda) {
  if (!std::is_sorted(lambda.begin(), lambda.end(), std::greater<>()))
    throw invalid_input("schur_monomial_oracle: " + lambda.to_string() + " is not a partition");
  QSymM out(lambda.size());
  for (const auto& mu : compositions_of(lambda.size())) out.add(mu, detail::count_ssyt(lambda, mu));
  return out;
}

/// Sum of quasisymmetric Schur functions over rearrangements of lambda.
inline QSymF schur_from_quasisymmetric(const Composition& lambda) {
  QSymF sum(lambda.size());
  for (const auto& b : compositions_of(lambda.size()))
    if (underlying_partition(b) == lambda) sum += quasisymmetric_schur(b);
  return sum;
}

inline bool schur_expansion_check(const Composition& lambda) {
  return to_monomial(schur_from_quasisymmetric(lambda)) == schur_monomial_oracle(lambda);
}

/// Square integer matrix indexed by compositions of n sorted ▶-descending.
/// Row alpha holds the F-expansion of the alpha-th basis function.
struct TransitionMatrix {
  std::vector<Composition> index;
  std::vector<std::vector<std::int64_t>> entries;

  bool is_upper_unitriangular() const {
    for (std::size_t r = 0; r < index.size(); ++r) {
      if (entries[r][r] != 1) return false;
      for (std::size_t c = 0; c < r; ++c)
        if (entries[r][c] != 0) return false;
    }
    return true;
  }
};

template <typename Build>
TransitionMatrix transition_matrix(int n, Build build) {
  TransitionMatrix m;
  m.index = compositions_of(n);
  sort_btr_descending(m.index);
  for (const auto& a : m.index) {
    const QSymF f = build(a);
    std::vector<std::int64_t> row;
    for (const auto& b : m.index) row.push_back(f.coefficient(b));
    m.entries.push_back(std::move(row));
  }
  return m;
}

inline TransitionMatrix canonical_transition_matrix(int n) { return transition_matrix(n, canonical_qsym); }
inline TransitionMatrix schur_transition_matrix(int n) { return transition_matrix(n, quasisymmetric_schur); }

}  // namespace srct
