#include <gtest/gtest.h>

#include "oracles.hpp"
#include "srct/qsym.hpp"

using namespace srct;

namespace {

std::map<std::vector<int>, std::int64_t> plain(const QSymF& f) {
  std::map<std::vector<int>, std::int64_t> m;
  for (const auto& [a, c] : f.terms()) m[a.parts()] = c;
  return m;
}

std::map<std::vector<int>, std::int64_t> plain(const QSymM& f) {
  std::map<std::vector<int>, std::int64_t> m;
  for (const auto& [a, c] : f.terms()) m[a.parts()] = c;
  return m;
}

}  // namespace

TEST(QuasiSym, Example213) {
  QSymF expect(6);
  expect.add({2, 1, 3}, 1);
  expect.add({2, 2, 2}, 1);
  expect.add({1, 2, 1, 2}, 1);
  EXPECT_EQ(quasisymmetric_schur({2, 1, 3}), expect);
  EXPECT_EQ(quasisymmetric_schur({2, 1, 3}).to_string(), "F(2,1,3) + F(2,2,2) + F(1,2,1,2)");
}

TEST(QuasiSym, CanonicalExample324) {
  const std::vector<Composition> terms{{3, 2, 4}, {3, 1, 2, 3}, {3, 1, 3, 2}, {3, 2, 2, 2}, {3, 3, 3},
                                       {2, 2, 2, 3}, {2, 2, 1, 2, 2}, {1, 3, 2, 3}, {1, 3, 1, 2, 2}};
  QSymF expect(9);
  for (const auto& t : terms) expect.add(t, 1);
  EXPECT_EQ(canonical_qsym({3, 2, 4}), expect);

  const std::vector<std::vector<std::vector<int>>> listed{
      {{3, 2, 1}, {5, 4}, {9, 8, 7, 6}}, {{3, 2, 1}, {6, 4}, {9, 8, 7, 5}}, {{3, 2, 1}, {7, 4}, {9, 8, 6, 5}},
      {{3, 2, 1}, {7, 5}, {9, 8, 6, 4}}, {{3, 2, 1}, {6, 5}, {9, 8, 7, 4}}, {{4, 2, 1}, {6, 5}, {9, 8, 7, 3}},
      {{4, 2, 1}, {7, 5}, {9, 8, 6, 3}}, {{4, 3, 1}, {6, 5}, {9, 8, 7, 2}}, {{4, 3, 1}, {7, 5}, {9, 8, 6, 2}}};
  std::set<std::vector<std::vector<int>>> got;
  const SrctClass e = canonical_class({3, 2, 4});
  for (const auto& t : e.members) got.insert(t.rows());
  EXPECT_EQ(got, std::set<std::vector<std::vector<int>>>(listed.begin(), listed.end()));
  EXPECT_EQ(e.source.rows(), listed.front());
  EXPECT_EQ(e.sink.rows(), listed.back());
}

TEST(QuasiSym, FundamentalToMonomialMatchesOracle) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : compositions_of(n)) EXPECT_EQ(plain(fundamental_to_monomial(a)), oracle::f_to_m({{a.parts(), 1}}, n));
}

TEST(QuasiSym, SchurFunctionFromDescentsMatchesOracle) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : compositions_of(n)) {
      std::map<std::vector<int>, std::int64_t> expect;
      for (const auto& rows : oracle::brute_force_srct(a.parts())) ++expect[oracle::comp_from_set(oracle::descents(a.parts(), {}, rows), n)];
      EXPECT_EQ(plain(quasisymmetric_schur(a)), expect) << a;
    }
}

TEST(QuasiSym, SchurRefinementMatchesSsytOracle) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const auto expect = oracle::schur_monomial(lambda.parts());
      EXPECT_EQ(plain(to_monomial(schur_from_quasisymmetric(lambda))), expect) << lambda;
      EXPECT_EQ(plain(schur_monomial_oracle(lambda)), expect) << lambda;
      EXPECT_TRUE(schur_expansion_check(lambda));
    }
  EXPECT_THROW(schur_monomial_oracle({1, 2}), invalid_input);
}

TEST(QuasiSym, TransitionMatricesAreUnitriangular) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_TRUE(canonical_transition_matrix(n).is_upper_unitriangular()) << n;
    EXPECT_TRUE(schur_transition_matrix(n).is_upper_unitriangular()) << n;
  }
  const TransitionMatrix m = canonical_transition_matrix(3);
  EXPECT_EQ(m.index, (std::vector<Composition>{{3}, {2, 1}, {1, 2}, {1, 1, 1}}));
}

TEST(QuasiSym, SkewFunctions) {
  EXPECT_EQ(skew_quasisymmetric_schur({{2, 2}, {2, 2}}), QSymF::one());
  EXPECT_EQ(skew_quasisymmetric_schur({{2, 1, 3}, {}}), quasisymmetric_schur({2, 1, 3}));
  EXPECT_EQ(skew_quasisymmetric_schur({{3, 4, 2, 3}, {2, 1, 3}}).coefficient({1, 2, 1, 2}) >= 1, true);
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : compositions_of(n))
      for (int m = 0; m < n; ++m)
        for (const auto& b : m == 0 ? std::vector<Composition>{Composition{}} : compositions_of(m)) {
          if (!lc_leq(b, a)) continue;
          std::map<std::vector<int>, std::int64_t> expect;
          for (const auto& rows : oracle::brute_force_srct(a.parts(), b.parts()))
            ++expect[oracle::comp_from_set(oracle::descents(a.parts(), b.parts(), rows), n - m)];
          EXPECT_EQ(plain(skew_quasisymmetric_schur({a, b})), expect) << a << "//" << b;
        }
}

TEST(QuasiSym, Arithmetic) {
  QSymF a(2), b(2), c(3);
  a.add({2}, 3);
  b.add({2}, -3);
  b.add({1, 1}, 1);
  EXPECT_EQ((a + b).coefficient({2}), 0);
  EXPECT_EQ((a + b).terms().size(), 1u);
  c.add({3}, 1);
  EXPECT_THROW(a += c, invalid_input);
  EXPECT_THROW(a.add({1}, 1), invalid_input);
  QSymF big(1);
  big.add({1}, INT64_MAX);
  EXPECT_THROW(big.add({1}, 1), std::overflow_error);
  EXPECT_EQ(quasisymmetric_schur({2, 2}).mass(), 2);
}
