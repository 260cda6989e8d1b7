#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "srct/io.hpp"
#include "srct/parallel.hpp"

namespace srct {

/// Replayable description of a failed check.
struct Witness {
  Composition shape;
  std::optional<Tableau> tableau;
  std::optional<int> generator;
  std::string detail;
};

inline void to_json(json& j, const Witness& w) {
  j = json::object();
  j["shape"] = w.shape;
  j["tableau"] = w.tableau ? json(*w.tableau) : json(nullptr);
  j["generator"] = w.generator ? json(*w.generator) : json(nullptr);
  j["detail"] = w.detail;
}

struct SuiteResult {
  std::string suite;
  int n = 0;
  std::size_t checked = 0;
  std::optional<Witness> failure;
  bool ok() const noexcept { return !failure; }
};

inline void to_json(json& j, const SuiteResult& r) {
  j = json::object();
  j["suite"] = r.suite;
  j["n"] = r.n;
  j["checked"] = r.checked;
  j["ok"] = r.ok();
  if (r.failure) j["witness"] = *r.failure;
}

namespace detail {

using ShapeCheck = std::function<std::optional<Witness>(const Composition&)>;

// Runs check over the shapes in parallel and reports the first failure in
// shape order. verification_failure from the library becomes a witness.
inline SuiteResult run_over(const std::string& suite, int n, const std::vector<Composition>& shapes, const ShapeCheck& check) {
  auto results = parallel_map(shapes, [&](const Composition& a) -> std::optional<Witness> {
    try {
      return check(a);
    } catch (const verification_failure& e) {
      return Witness{a, std::nullopt, std::nullopt, e.what()};
    }
  });
  SuiteResult r{suite, n, shapes.size(), std::nullopt};
  for (auto& w : results)
    if (w) {
      r.failure = std::move(w);
      break;
    }
  return r;
}

inline std::vector<Composition> compositions_up_to(int n) {
  std::vector<Composition> out;
  for (int k = 1; k <= n; ++k)
    for (auto& a : compositions_of(k)) out.push_back(std::move(a));
  return out;
}

inline std::vector<Composition> partitions_up_to(int n) {
  std::vector<Composition> out;
  for (int k = 1; k <= n; ++k)
    for (auto& a : partitions_of(k)) out.push_back(std::move(a));
  return out;
}

}  // namespace detail

inline SuiteResult verify_relations_suite(int n) {
  return detail::run_over("relations", n, detail::compositions_up_to(n), [](const Composition& a) -> std::optional<Witness> {
    const RelationReport rep = verify_hecke_relations(a);
    if (rep.ok()) return std::nullopt;
    const auto& c = *rep.counterexample;
    return Witness{a, c.tableau, c.i, c.relation + " relation fails for i = " + std::to_string(c.i) + ", j = " + std::to_string(c.j)};
  });
}

inline SuiteResult verify_characteristic_suite(int n) {
  return detail::run_over("characteristic", n, detail::compositions_up_to(n), [](const Composition& a) -> std::optional<Witness> {
    const HeckeModule m = build_module(a);
    if (auto rel = verify_module_relations(m); !rel.ok()) return Witness{a, std::nullopt, std::nullopt, *rel.failure};
    if (!is_filtration_compatible(m)) return Witness{a, std::nullopt, std::nullopt, "basis order is not a filtration"};
    QSymF expected(a.size());
    for (const auto& t : enumerate_srct(a)) expected.add(descent_composition(t), 1);
    if (!(characteristic(m) == expected)) return Witness{a, std::nullopt, std::nullopt, "characteristic differs from descent sum"};
    return std::nullopt;
  });
}

inline SuiteResult verify_schur_suite(int n) {
  return detail::run_over("schur", n, detail::partitions_up_to(n), [](const Composition& lambda) -> std::optional<Witness> {
    if (schur_expansion_check(lambda)) return std::nullopt;
    return Witness{lambda, std::nullopt, std::nullopt, "quasisymmetric Schur sum differs from the SSYT expansion"};
  });
}

inline SuiteResult verify_classes_suite(int n) {
  // partition_into_classes throws on a missing/duplicate source or sink or a misplaced 1
  return detail::run_over("classes", n, detail::compositions_up_to(n), [](const Composition& a) -> std::optional<Witness> {
    std::size_t total = 0;
    for (const auto& cls : equivalence_classes(a)) {
      total += cls.members.size();
      if (!cls.contains(cls.source) || !cls.contains(cls.sink))
        return Witness{a, cls.source, std::nullopt, "source or sink outside its class"};
    }
    if (total != enumerate_srct(a).size()) return Witness{a, std::nullopt, std::nullopt, "classes do not partition SRCT(alpha)"};
    return std::nullopt;
  });
}

inline SuiteResult verify_bruhat_suite(int n) {
  return detail::run_over("bruhat", n, detail::compositions_up_to(n), [](const Composition& a) -> std::optional<Witness> {
    for (const auto& cls : equivalence_classes(a)) {
      const FinitePoset p = flip_poset(cls);
      if (!verify_interval_iso(cls)) return Witness{a, cls.source, std::nullopt, "flip poset differs from the weak order interval"};
      if (!p.graded()) return Witness{a, cls.source, std::nullopt, "flip poset is not graded by inversions"};
      if (!p.is_lattice()) return Witness{a, cls.source, std::nullopt, "flip poset is not a lattice"};
    }
    return std::nullopt;
  });
}

inline SuiteResult verify_classification_suite(int n) {
  return detail::run_over("classification", n, detail::compositions_up_to(n), [](const Composition& a) -> std::optional<Witness> {
    const VerdictReport v = indecomposability_verdict(a);
    const bool simple = is_simple(a);
    if ((v.classes == 1) != simple || (v.commutant_dimension == 1) != simple)
      return Witness{a, std::nullopt, std::nullopt,
                     "simple = " + std::to_string(simple) + ", classes = " + std::to_string(v.classes) +
                         ", commutant dimension = " + std::to_string(v.commutant_dimension)};
    if (!direct_sum_check(a).ok()) return Witness{a, std::nullopt, std::nullopt, "class blocks are not submodules"};
    return std::nullopt;
  });
}

inline SuiteResult verify_indec_suite(int n) {
  return detail::run_over("indec", n, detail::compositions_up_to(n), [](const Composition& a) -> std::optional<Witness> {
    const Verdict expected = is_simple(a) ? Verdict::indecomposable : Verdict::decomposable;
    const Verdict got = indecomposability_verdict(a).verdict;
    if (got == expected) return std::nullopt;
    return Witness{a, std::nullopt, std::nullopt, std::string("verdict ") + verdict_name(got) + ", expected " + verdict_name(expected)};
  });
}

inline SuiteResult verify_canonical_suite(int n) {
  std::vector<Composition> sizes;
  for (int k = 1; k <= n; ++k) sizes.push_back(Composition(std::vector<int>(static_cast<std::size_t>(k), 1)));
  return detail::run_over("canonical", n, sizes, [](const Composition& ones) -> std::optional<Witness> {
    const TransitionMatrix m = canonical_transition_matrix(ones.size());
    if (m.is_upper_unitriangular()) return std::nullopt;
    return Witness{ones, std::nullopt, std::nullopt, "canonical transition matrix is not unitriangular in degree " + std::to_string(ones.size())};
  });
}

inline SuiteResult verify_restriction_suite(int n) {
  return detail::run_over("restriction", n, detail::compositions_up_to(n), [](const Composition& a) -> std::optional<Witness> {
    for (int m = 0; m <= a.size(); ++m) {
      const RestrictionReport r = restrict_and_verify(a, m);
      if (!r.ok()) return Witness{a, std::nullopt, m, *r.failure};
    }
    return std::nullopt;
  });
}

inline SuiteResult verify_branching_suite(int n) {
  return detail::run_over("branching", n, detail::compositions_up_to(n), [](const Composition& a) -> std::optional<Witness> {
    if (branching_check(a).ok) return std::nullopt;
    return Witness{a, std::nullopt, std::nullopt, "branching rule fails"};
  });
}

/// Shifted bijection for strict reverse partitions of size <= n, and the count
/// families whose shapes have at most n cells (rectangles and staircases with
/// parts >= 2, where the truncated-shape identity applies).
inline SuiteResult verify_counts_suite(int n) {
  std::vector<Composition> shapes;
  for (int k = 1; k <= n; ++k)
    for (auto& a : strict_reverse_partitions_of(k)) shapes.push_back(std::move(a));
  SuiteResult r = detail::run_over("counts", n, shapes, [](const Composition& a) -> std::optional<Witness> {
    class_bijection(a);
    return std::nullopt;
  });
  if (!r.ok()) return r;
  std::vector<std::pair<Family, std::vector<int>>> cases;
  for (int k = 1; 3 * k <= n; ++k) cases.push_back({Family::threes, {k}});
  for (int m = 2; m * (m + 3) / 2 <= n; ++m) cases.push_back({Family::staircase_double, {m}});
  for (int w = 2; w <= n; ++w)
    for (int k = 1; w * k <= n; ++k) cases.push_back({Family::rectangle, {w, k}});
  for (const auto& [family, param] : cases) {
    ++r.checked;
    const CountReport c = count_formulas(family, param);
    if (!c.match()) {
      r.failure = Witness{c.shape, std::nullopt, std::nullopt, json(c).dump()};
      break;
    }
  }
  return r;
}

inline const std::vector<std::pair<std::string, SuiteResult (*)(int)>>& suites() {
  static const std::vector<std::pair<std::string, SuiteResult (*)(int)>> table{
      {"relations", verify_relations_suite},   {"characteristic", verify_characteristic_suite},
      {"schur", verify_schur_suite},           {"classes", verify_classes_suite},
      {"bruhat", verify_bruhat_suite},         {"classification", verify_classification_suite},
      {"canonical", verify_canonical_suite},   {"counts", verify_counts_suite},
      {"restriction", verify_restriction_suite}, {"branching", verify_branching_suite},
      {"indec", verify_indec_suite},
  };
  return table;
}

}  // namespace srct
