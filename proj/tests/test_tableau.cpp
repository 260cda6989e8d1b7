#include <gtest/gtest.h>

#include "oracles.hpp"
#include "srct/tableau.hpp"

using namespace srct;

namespace {

const Tableau example_a{Composition{3, 4, 3, 2}, {{5, 4, 2}, {8, 7, 6, 3}, {11, 10, 1}, {12, 9}}};
const Tableau example_b{Composition{3, 4, 2, 3}, {{5, 4, 2}, {9, 7, 6, 3}, {10, 1}, {12, 11, 8}}};

std::vector<oracle::Rows> rows_of(const std::vector<Tableau>& ts) {
  std::vector<oracle::Rows> out;
  for (const auto& t : ts) out.push_back(t.rows());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Tableau, ExamplesAreValid) {
  EXPECT_TRUE(is_valid(example_a));
  EXPECT_TRUE(is_valid(example_b));
  EXPECT_EQ(descent_set(example_a), (IndexSet{1, 2, 5, 8, 9, 11}));
  EXPECT_EQ(descent_composition(example_a), (Composition{1, 1, 3, 3, 1, 2, 1}));
  EXPECT_EQ(descent_set(example_b), (IndexSet{1, 2, 5, 7, 9, 10}));
  EXPECT_EQ(column_word(example_b), Permutation({5, 9, 10, 12, 4, 7, 1, 11, 2, 6, 8, 3}));
}

TEST(Tableau, ReportsFirstViolatedRule) {
  EXPECT_EQ(is_valid_srct({2, 1}, {{1, 2}, {3}}).rule, Rule::row_decrease);
  EXPECT_EQ(is_valid_srct({1, 2}, {{3}, {2, 1}}).rule, Rule::first_column);
  // 2 > 1 in the cell below-right forces a cell right of 2
  EXPECT_EQ(is_valid_srct({1, 2}, {{2}, {3, 1}}).rule, Rule::triple_rule);
  EXPECT_EQ(is_valid_srct({1, 2}, {{3}, {4, 2}, }).rule, Rule::malformed);
  EXPECT_EQ(is_valid_srct({2, 2}, {{4, 1}, {3, 2}}).rule, Rule::first_column);
  EXPECT_EQ(is_valid_srct({1, 2}, {{1}, {3, 2}}).rule, Rule::none);
  EXPECT_EQ(is_valid_srct({2, 2}, {{3, 1}, {4, 2}}).rule, Rule::triple_rule);
  EXPECT_EQ(is_valid_srct({2, 2}, {{2, 1}, {4, 3}}).rule, Rule::none);
  EXPECT_EQ(is_valid_srct({1, 3}, {{3}, {4, 2, 1}}).rule, Rule::triple_rule);
  EXPECT_EQ(is_valid_srct({1, 2}, {{1}, {2, 2}}).rule, Rule::malformed);
}

TEST(Tableau, MatchesBruteForceUpToSeven) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& a : compositions_of(n)) EXPECT_EQ(rows_of(enumerate_srct(a)), oracle::brute_force_srct(a.parts())) << a;
}

TEST(Tableau, EnumerationIsSortedByColumnWord) {
  const auto ts = enumerate_srct({2, 1, 3});
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) EXPECT_LT(column_word(ts[i]), column_word(ts[i + 1]));
}

TEST(Tableau, TotalCountIsNumberOfInvolutions) {
  // summing over rearrangements of lambda gives f^lambda; the sum over lambda counts involutions
  const std::vector<std::size_t> involutions{1, 2, 4, 10, 26, 76, 232, 764};
  for (int n = 1; n <= 8; ++n) {
    std::size_t total = 0;
    for (const auto& a : compositions_of(n)) total += enumerate_srct(a).size();
    EXPECT_EQ(total, involutions[static_cast<std::size_t>(n - 1)]) << n;
  }
}

TEST(Tableau, DescentsMatchDefinition) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : compositions_of(n))
      for (const auto& t : enumerate_srct(a)) EXPECT_EQ(descent_set(t), oracle::descents(a.parts(), {}, t.rows()));
}

TEST(Canonical, UniqueTableauWithDescentCompositionAlpha) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& a : compositions_of(n)) {
      int hits = 0;
      for (const auto& t : enumerate_srct(a))
        if (descent_composition(t) == a) {
          ++hits;
          EXPECT_EQ(t, canonical_tableau(a));
        }
      EXPECT_EQ(hits, 1) << a;
    }
}

TEST(GrowthWord, RebuildsShape) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : compositions_of(n))
      for (const auto& t : enumerate_srct(a)) EXPECT_EQ(apply_growth_word(growth_word(t)), std::optional<Composition>(a));
  EXPECT_EQ(apply_box_adding(1, {2, 1}), std::optional<Composition>(Composition{1, 2, 1}));
  EXPECT_EQ(apply_box_adding(2, {2, 1, 1}), std::optional<Composition>(Composition{2, 2, 1}));
  EXPECT_EQ(apply_box_adding(3, {1, 1}), std::nullopt);
}

TEST(Skew, ExampleTableau) {
  const Tableau t(Composition{3, 4, 2, 3}, Composition{2, 1, 3}, {{6, 4, 1}, {5, 2}, {3}, {}});
  EXPECT_TRUE(is_valid(t));
  EXPECT_EQ(descent_set(t), (IndexSet{1, 3, 4}));
  EXPECT_EQ(descent_composition(t), (Composition{1, 2, 1, 2}));
  EXPECT_EQ(t.at(2, 1), Tableau::infinity);
  EXPECT_EQ(t.to_string(), "6 4 1 / . . 5 2 / . 3 / . . .");
}

TEST(Skew, MatchesBruteForce) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : compositions_of(n))
      for (int m = 0; m < n; ++m)
        for (const auto& b : m == 0 ? std::vector<Composition>{Composition{}} : compositions_of(m)) {
          if (!lc_leq(b, a)) continue;
          EXPECT_EQ(rows_of(enumerate_skew_srct({a, b})), oracle::brute_force_srct(a.parts(), b.parts())) << a << "//" << b;
        }
}

TEST(Skew, RejectsShapesOutsidePoset) {
  EXPECT_THROW(enumerate_skew_srct({{2, 3}, {2, 2}}), invalid_input);
  EXPECT_THROW(Tableau(Composition{2}, Composition{3}, {{}}), invalid_input);
}

TEST(Split, ReassemblesTableau) {
  for (const auto& t : enumerate_srct({3, 1, 2}))
    for (int m = 0; m <= 6; ++m) {
      const auto [low, high] = split_at(t, m);
      EXPECT_EQ(low.size(), m);
      EXPECT_EQ(high.size(), 6 - m);
      EXPECT_TRUE(is_valid(low));
      EXPECT_TRUE(is_valid(high));
      for (int v = 1; v <= 6; ++v) {
        const Cell c = t.position(v);
        if (v <= m) {
          EXPECT_EQ(low.position(v), c);
        } else {
          EXPECT_TRUE(low.is_inner(c.row, c.col));
          const Cell h = high.position(v - m);
          EXPECT_EQ(h.col, c.col);
        }
      }
    }
}

TEST(Drn, ExampleSource) {
  const Tableau src(Composition{4, 3, 2, 3}, {{7, 6, 5, 4}, {8, 3, 2}, {9, 1}, {12, 11, 10}});
  EXPECT_TRUE(is_valid(src));
  EXPECT_EQ(distinguished_removable_columns(src), (IndexSet{2, 3, 4}));
}
