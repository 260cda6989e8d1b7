#include <gtest/gtest.h>

#include "srct/classes.hpp"

using namespace srct;

namespace {

using Rows = std::vector<std::vector<int>>;

const SrctClass& class_of(const std::vector<SrctClass>& cs, const Tableau& t) {
  for (const auto& c : cs)
    if (c.contains(t)) return c;
  throw std::runtime_error("tableau in no class");
}

}  // namespace

TEST(Classes, StandardizedColumnWordExample) {
  const Tableau t(Composition{3, 4, 3, 2}, {{5, 4, 2}, {8, 7, 6, 3}, {11, 10, 1}, {12, 9}});
  EXPECT_EQ(standardized_column_word(t), (Rows{{1, 2, 3, 4}, {1, 2, 4, 3}, {2, 3, 1}, {1}}));
  EXPECT_EQ(class_key(t), "1 2 3 4|1 2 4 3|2 3 1|1");
}

TEST(Classes, SourceSinkDrnExample4323) {
  const Tableau src(Composition{4, 3, 2, 3}, {{7, 6, 5, 4}, {8, 3, 2}, {9, 1}, {12, 11, 10}});
  const Tableau snk(Composition{4, 3, 2, 3}, {{8, 6, 3, 1}, {9, 5, 2}, {10, 4}, {12, 11, 7}});
  const auto cs = equivalence_classes({4, 3, 2, 3});
  const SrctClass& c = class_of(cs, src);
  EXPECT_EQ(c.source, src);
  EXPECT_EQ(c.sink, snk);
  EXPECT_EQ(c.drn, (IndexSet{2, 3, 4}));
  EXPECT_EQ(class_key(src), "1 2 3 4|3 2 1 4|2 1 3|1");
  EXPECT_EQ(class_key(snk), class_key(src));
  EXPECT_TRUE(is_source(src));
  EXPECT_TRUE(is_sink(snk));
}

TEST(Classes, SourceSinkDrnExample3423) {
  const Tableau t(Composition{3, 4, 2, 3}, {{5, 4, 2}, {9, 7, 6, 3}, {10, 1}, {12, 11, 8}});
  const auto cs = equivalence_classes({3, 4, 2, 3});
  const SrctClass& c = class_of(cs, t);
  EXPECT_EQ(c.source.rows(), (Rows{{4, 3, 2}, {8, 7, 6, 5}, {9, 1}, {12, 11, 10}}));
  EXPECT_EQ(c.sink.rows(), (Rows{{6, 4, 1}, {9, 7, 5, 2}, {10, 3}, {12, 11, 8}}));
  EXPECT_EQ(c.drn, (IndexSet{2, 3}));
}

TEST(Classes, StructureUpToSix) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : compositions_of(n)) {
      const auto all = enumerate_srct(a);
      const auto cs = equivalence_classes(a);
      std::size_t total = 0;
      for (const auto& c : cs) {
        total += c.members.size();
        int sources = 0, sinks = 0;
        for (const auto& t : c.members) {
          sources += is_source(t);
          sinks += is_sink(t);
          EXPECT_EQ(class_key(t), c.key());
          EXPECT_EQ(distinguished_removable_columns(t), c.drn);
        }
        EXPECT_EQ(sources, 1);
        EXPECT_EQ(sinks, 1);
        EXPECT_EQ(c.source.position(1).col, *c.drn.begin());
        EXPECT_EQ(c.sink.position(1).col, *c.drn.rbegin());
        // the class is generated by its source
        EXPECT_EQ(orbit(c.source), c.members);
      }
      EXPECT_EQ(total, all.size());
    }
}

TEST(Classes, FlipsStayInsideTheirClass) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& a : compositions_of(n))
      for (const auto& t : enumerate_srct(a))
        for (int i = 1; i < n; ++i) {
          const FlipResult r = pi(i, t);
          if (!r.is_zero()) EXPECT_EQ(class_key(r.tableau()), class_key(t));
        }
}

TEST(Classes, CanonicalClassHasIncreasingColumns) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : compositions_of(n)) {
      const SrctClass e = canonical_class(a);
      std::size_t inc = 0;
      for (const auto& t : enumerate_srct(a)) inc += has_increasing_columns(t);
      EXPECT_EQ(e.members.size(), inc);
      for (const auto& t : e.members) EXPECT_TRUE(has_increasing_columns(t));
      EXPECT_EQ(e.source, canonical_tableau(a));
    }
  EXPECT_EQ(canonical_class({3, 2, 4}).members.size(), 9u);
}

TEST(Classes, ClassCountMatchesSimplicity) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& a : compositions_of(n)) EXPECT_EQ(equivalence_classes(a).size() == 1, is_simple(a)) << a;
  EXPECT_EQ(equivalence_classes({2, 2}).size(), 2u);
}
