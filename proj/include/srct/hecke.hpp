#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "srct/tableau.hpp"

namespace srct {

/// Result of a 0-Hecke operator on a tableau. Zero is an ordinary absorbing
/// value; consumers doing linear algebra map it to the zero vector.
class FlipResult {
 public:
  enum class Kind { unchanged, zero, swapped };

  static FlipResult unchanged(Tableau t) { return FlipResult(Kind::unchanged, std::move(t)); }
  static FlipResult zero() { return FlipResult(Kind::zero, {}); }
  static FlipResult swapped(Tableau t) { return FlipResult(Kind::swapped, std::move(t)); }

  Kind kind() const noexcept { return kind_; }
  bool is_zero() const noexcept { return kind_ == Kind::zero; }
  /// The resulting tableau (the input itself when unchanged). Precondition: !is_zero().
  const Tableau& tableau() const {
    if (is_zero()) throw invalid_input("FlipResult: zero has no tableau");
    return t_;
  }

  friend bool operator==(const FlipResult& a, const FlipResult& b) {
    return a.kind_ == b.kind_ && (a.kind_ == Kind::zero || a.t_ == b.t_);
  }

 private:
  FlipResult(Kind k, Tableau t) : kind_(k), t_(std::move(t)) {}
  Kind kind_;
  Tableau t_;
};

inline void check_generator(int i, const Tableau& t) {
  if (i < 1 || i >= t.size())
    throw invalid_input("generator index " + std::to_string(i) + " out of range for size " + std::to_string(t.size()));
}

inline bool is_descent(int i, const Tableau& t) {
  check_generator(i, t);
  return t.position(i + 1).col >= t.position(i).col;
}

/// i and i+1 share a column, or sit in adjacent columns with i+1 strictly
/// southeast of i.
inline bool is_attacking(int i, const Tableau& t) {
  check_generator(i, t);
  const Cell a = t.position(i), b = t.position(i + 1);
  if (a.col == b.col) return true;
  return b.col == a.col + 1 && b.row > a.row;
}

inline FlipResult pi(int i, const Tableau& t) {
  if (!is_descent(i, t)) return FlipResult::unchanged(t);
  if (is_attacking(i, t)) return FlipResult::zero();
  return FlipResult::swapped(t.swapped(i));
}

/// Applies the generators in sequence order (first letter first).
inline FlipResult pi_word(const std::vector<int>& word, const Tableau& t) {
  Tableau cur = t;
  bool moved = false;
  for (int i : word) {
    FlipResult r = pi(i, cur);
    if (r.is_zero()) return r;
    if (r.kind() == FlipResult::Kind::swapped) {
      moved = true;
      cur = r.tableau();
    }
  }
  return moved ? FlipResult::swapped(std::move(cur)) : FlipResult::unchanged(std::move(cur));
}

struct RelationWitness {
  std::string relation;  // "idempotent", "braid", "commute"
  int i = 0;
  int j = 0;
  Tableau tableau;
};

struct RelationReport {
  std::size_t tableaux_checked = 0;
  std::optional<RelationWitness> counterexample;
  bool ok() const noexcept { return !counterexample.has_value(); }
};

/// Idempotence, braid and far-commutation relations on every given tableau.
inline RelationReport verify_hecke_relations(const std::vector<Tableau>& tableaux) {
  RelationReport rep;
  for (const auto& t : tableaux) {
    ++rep.tableaux_checked;
    const int n = t.size();
    for (int i = 1; i < n; ++i) {
      if (!(pi_word({i, i}, t) == pi(i, t))) {
        rep.counterexample = RelationWitness{"idempotent", i, i, t};
        return rep;
      }
      if (i + 1 < n && !(pi_word({i, i + 1, i}, t) == pi_word({i + 1, i, i + 1}, t))) {
        rep.counterexample = RelationWitness{"braid", i, i + 1, t};
        return rep;
      }
      for (int j = i + 2; j < n; ++j) {
        if (!(pi_word({i, j}, t) == pi_word({j, i}, t))) {
          rep.counterexample = RelationWitness{"commute", i, j, t};
          return rep;
        }
      }
    }
  }
  return rep;
}

inline RelationReport verify_hecke_relations(const Composition& a) { return verify_hecke_relations(enumerate_srct(a)); }

/// Forward closure of {t} under nontrivial flips, sorted by column word.
inline std::vector<Tableau> orbit(const Tableau& t) {
  std::set<Tableau> seen{t};
  std::deque<Tableau> queue{t};
  while (!queue.empty()) {
    Tableau cur = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i < cur.size(); ++i) {
      FlipResult r = pi(i, cur);
      if (r.kind() != FlipResult::Kind::swapped) continue;
      if (seen.insert(r.tableau()).second) queue.push_back(r.tableau());
    }
  }
  std::vector<Tableau> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return column_word(a) < column_word(b); });
  return out;
}

}  // namespace srct
