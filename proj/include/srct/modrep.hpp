#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srct/classes.hpp"
#include "srct/linalg.hpp"
#include "srct/qsym.hpp"

namespace srct {

/// An explicit H_n(0)-module: an ordered tableau basis and one 0/1 matrix per
/// generator. Column c of generators[i-1] is the image of basis[c] under pi_i.
struct HeckeModule {
  int degree = 0;
  std::vector<Tableau> basis;
  std::vector<IntMatrix> generators;

  std::size_t dimension() const noexcept { return basis.size(); }
  const IntMatrix& generator(int i) const { return generators.at(static_cast<std::size_t>(i - 1)); }

  std::size_t index_of(const Tableau& t) const {
    auto it = std::find(basis.begin(), basis.end(), t);
    if (it == basis.end()) throw verification_failure("tableau outside module basis: " + t.to_string());
    return static_cast<std::size_t>(it - basis.begin());
  }
};

/// Basis order (inversions of the column word, then column word): a linear
/// extension of the flip order because every flip adds one inversion.
inline void sort_linear_extension(std::vector<Tableau>& tableaux) {
  std::vector<std::pair<std::pair<int, Permutation>, Tableau>> keyed;
  keyed.reserve(tableaux.size());
  for (auto& t : tableaux) {
    Permutation w = column_word(t);
    const int l = w.length();
    keyed.push_back({{l, std::move(w)}, std::move(t)});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  tableaux.clear();
  for (auto& k : keyed) tableaux.push_back(std::move(k.second));
}

inline HeckeModule module_from_basis(std::vector<Tableau> basis, int degree) {
  sort_linear_extension(basis);
  HeckeModule m;
  m.degree = degree;
  m.basis = std::move(basis);
  std::map<Tableau, std::size_t> index;
  for (std::size_t k = 0; k < m.basis.size(); ++k) index.emplace(m.basis[k], k);
  const std::size_t d = m.basis.size();
  for (int i = 1; i < degree; ++i) {
    IntMatrix a(d, d);
    for (std::size_t c = 0; c < d; ++c) {
      FlipResult r = pi(i, m.basis[c]);
      if (r.is_zero()) continue;
      auto it = index.find(r.tableau());
      if (it == index.end()) throw verification_failure("basis not closed under pi_" + std::to_string(i) + ": " + r.tableau().to_string());
      a(it->second, c) = 1;
    }
    m.generators.push_back(std::move(a));
  }
  return m;
}

inline HeckeModule build_module(const Composition& a) { return module_from_basis(enumerate_srct(a), a.size()); }

inline HeckeModule build_class_module(const SrctClass& cls) { return module_from_basis(cls.members, cls.shape.size()); }

inline HeckeModule build_skew_module(const SkewShapePair& shape) {
  return module_from_basis(enumerate_skew_srct(shape), shape.size());
}

struct ModuleRelationReport {
  std::optional<std::string> failure;
  bool ok() const noexcept { return !failure; }
};

/// The three 0-Hecke relation families, checked on the matrices.
inline ModuleRelationReport verify_module_relations(const HeckeModule& m) {
  const int n = m.degree;
  for (int i = 1; i < n; ++i) {
    const IntMatrix& a = m.generator(i);
    if (!(a * a == a)) return {"A_" + std::to_string(i) + "^2 != A_" + std::to_string(i)};
    if (i + 1 < n) {
      const IntMatrix& b = m.generator(i + 1);
      if (!(a * b * a == b * a * b)) return {"braid fails at i = " + std::to_string(i)};
    }
    for (int j = i + 2; j < n; ++j) {
      const IntMatrix& b = m.generator(j);
      if (!(a * b == b * a)) return {"A_" + std::to_string(i) + " and A_" + std::to_string(j) + " do not commute"};
    }
  }
  return {};
}

/// Every generator sends basis vector c to 0, to itself, or to a later basis
/// vector, so the tail spans form a filtration by submodules.
inline bool is_filtration_compatible(const HeckeModule& m) {
  for (const auto& a : m.generators) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      for (std::size_t r = 0; r < a.rows(); ++r) {
        if (a(r, c) == 0) continue;
        if (a(r, c) != 1 || r < c) return false;
      }
    }
  }
  return true;
}

/// Quasisymmetric characteristic: one F_{comp(tau)} per composition factor of
/// the filtration.
inline QSymF characteristic(const HeckeModule& m) {
  if (m.degree == 0) return QSymF::one();
  return descent_generating_function(m.basis, m.degree);
}

struct DirectSumReport {
  std::vector<std::size_t> block_sizes;
  std::size_t dimension = 0;
  bool invariant = true;
  bool ok() const noexcept {
    std::size_t total = 0;
    for (auto s : block_sizes) total += s;
    return invariant && total == dimension;
  }
};

/// Each class's coordinate subspace is stable under every generator and the
/// blocks exhaust the module.
inline DirectSumReport direct_sum_check(const Composition& a) {
  const HeckeModule m = build_module(a);
  const auto classes = equivalence_classes(a);
  DirectSumReport rep;
  rep.dimension = m.dimension();
  std::vector<std::size_t> class_of(m.dimension());
  for (std::size_t k = 0; k < classes.size(); ++k) {
    rep.block_sizes.push_back(classes[k].members.size());
    for (const auto& t : classes[k].members) class_of[m.index_of(t)] = k;
  }
  for (const auto& g : m.generators)
    for (std::size_t c = 0; c < g.cols(); ++c)
      for (std::size_t r = 0; r < g.rows(); ++r)
        if (g(r, c) != 0 && class_of[r] != class_of[c]) rep.invariant = false;
  return rep;
}

/// Spanning set of the endomorphism algebra {M : M A_i = A_i M for all i}.
struct CommutantBasis {
  std::size_t dimension_of_module = 0;
  std::vector<RationalMatrix> basis;
  std::size_t dimension() const noexcept { return basis.size(); }
};

inline CommutantBasis commutant(const HeckeModule& m) {
  const std::size_t d = m.dimension();
  auto var = [d](std::size_t r, std::size_t c) { return r * d + c; };
  std::vector<SparseRow> equations;
  for (const auto& a : m.generators) {
    // image[c] = r with a(r, c) = 1, or d when pi_i kills basis vector c
    std::vector<std::size_t> image(d, d);
    std::vector<std::vector<std::size_t>> preimage(d);
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t r = 0; r < d; ++r)
        if (a(r, c) != 0) {
          image[c] = r;
          preimage[r].push_back(c);
        }
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        SparseRow eq;
        if (image[c] != d) eq[var(r, image[c])] += 1;   // (M A)(r, c)
        for (std::size_t k : preimage[r]) eq[var(k, c)] -= 1;  // (A M)(r, c)
        bool trivial = std::all_of(eq.begin(), eq.end(), [](const auto& e) { return e.second == 0; });
        if (!trivial) equations.push_back(std::move(eq));
      }
    }
  }
  CommutantBasis out;
  out.dimension_of_module = d;
  for (auto& vec : nullspace(equations, d * d)) {
    RationalMatrix mat(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) mat(r, c) = vec[var(r, c)];
    out.basis.push_back(std::move(mat));
  }
  return out;
}

inline RationalMatrix to_rational(const IntMatrix& a) {
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  return out;
}

enum class Verdict { indecomposable, decomposable, inconclusive };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::indecomposable: return "indecomposable";
    case Verdict::decomposable: return "decomposable";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct VerdictReport {
  Verdict verdict = Verdict::inconclusive;
  std::size_t classes = 0;
  std::size_t commutant_dimension = 0;
};

/// Decomposable when two or more invariant class blocks exist; indecomposable
/// when the endomorphism algebra is one-dimensional; otherwise inconclusive.
inline VerdictReport indecomposability_verdict(const Composition& a) {
  VerdictReport rep;
  rep.classes = equivalence_classes(a).size();
  rep.commutant_dimension = commutant(build_module(a)).dimension();
  if (rep.classes >= 2) rep.verdict = Verdict::decomposable;
  else if (rep.commutant_dimension == 1) rep.verdict = Verdict::indecomposable;
  return rep;
}

inline IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0)
        for (std::size_t k = 0; k < b.rows(); ++k)
          for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

struct RestrictionBlock {
  Composition beta;
  std::size_t size = 0;
  std::size_t skew_dimension = 0;
  std::size_t straight_dimension = 0;
  bool invariant = false;
  bool intertwines = false;
};

struct RestrictionReport {
  Composition shape;
  int m = 0;
  std::vector<RestrictionBlock> blocks;
  bool index_set_matches = false;  // blocks are exactly beta |= n-m with beta <=_c alpha
  std::optional<std::string> failure;
  bool ok() const noexcept { return !failure; }
};

/// Restriction to H_m(0) x H_{n-m}(0): split the basis by the shape of the
/// entries > m, check every block is stable under pi_i (i != m), and that
/// tau -> (tau_{<=m}, tau_{>m}) intertwines the block with the tensor product
/// of the skew and straight modules.
inline RestrictionReport restrict_and_verify(const Composition& a, int m) {
  const int n = a.size();
  if (m < 0 || m > n) throw invalid_input("restrict_and_verify: m out of range");
  RestrictionReport rep;
  rep.shape = a;
  rep.m = m;
  const HeckeModule full = build_module(a);
  std::map<Composition, std::vector<std::size_t>> groups;
  std::vector<std::pair<Tableau, Tableau>> parts;
  for (std::size_t k = 0; k < full.dimension(); ++k) {
    parts.push_back(split_at(full.basis[k], m));
    groups[parts.back().second.shape()].push_back(k);
  }
  std::vector<Composition> expected;
  for (const auto& b : compositions_of(n - m))
    if (lc_leq(b, a)) expected.push_back(b);
  std::vector<Composition> got;
  for (const auto& [b, _] : groups) got.push_back(b);
  rep.index_set_matches = (got == expected);
  if (!rep.index_set_matches) rep.failure = "block index set differs from {beta <=_c alpha}";

  std::vector<std::size_t> block_of(full.dimension());
  for (const auto& [b, members] : groups)
    for (auto k : members) block_of[k] = static_cast<std::size_t>(std::distance(groups.begin(), groups.find(b)));

  for (const auto& [beta, members] : groups) {
    RestrictionBlock blk;
    blk.beta = beta;
    blk.size = members.size();
    const HeckeModule skew = build_skew_module({a, beta});
    const HeckeModule straight = build_module(beta);
    blk.skew_dimension = skew.dimension();
    blk.straight_dimension = straight.dimension();
    const std::size_t sd = straight.dimension();

    // theta: block position -> tensor position (skew index major)
    std::vector<std::size_t> theta;
    std::vector<bool> hit(blk.skew_dimension * sd, false);
    bool bijective = blk.size == blk.skew_dimension * sd;
    for (auto k : members) {
      const std::size_t pos = skew.index_of(parts[k].first) * sd + straight.index_of(parts[k].second);
      if (hit[pos]) bijective = false;
      hit[pos] = true;
      theta.push_back(pos);
    }
    blk.invariant = true;
    blk.intertwines = bijective;
    for (int i = 1; i < n; ++i) {
      if (i == m) continue;
      const IntMatrix& g = full.generator(i);
      IntMatrix relabeled(blk.size, blk.size);
      for (std::size_t c = 0; c < blk.size; ++c) {
        for (std::size_t r = 0; r < full.dimension(); ++r) {
          if (g(r, members[c]) == 0) continue;
          if (block_of[r] != block_of[members[c]]) {
            blk.invariant = false;
            continue;
          }
          auto rpos = std::find(members.begin(), members.end(), r) - members.begin();
          relabeled(theta[static_cast<std::size_t>(rpos)], theta[c]) = g(r, members[c]);
        }
      }
      if (!bijective || !blk.invariant) continue;
      const IntMatrix expect = i < m ? kronecker(skew.generator(i), IntMatrix::identity(sd))
                                     : kronecker(IntMatrix::identity(blk.skew_dimension), straight.generator(i - m));
      if (!(relabeled == expect)) blk.intertwines = false;
    }
    if (!blk.invariant && !rep.failure) rep.failure = "block " + beta.to_string() + " is not invariant";
    if (!blk.intertwines && !rep.failure) rep.failure = "block " + beta.to_string() + " does not match the tensor product";
    rep.blocks.push_back(std::move(blk));
  }
  return rep;
}

struct BranchingReport {
  std::size_t dimension = 0;
  std::vector<Composition> reductions;  // alpha^- for each removable node
  std::vector<std::size_t> reduction_dimensions;
  bool ok = false;
};

/// Restriction to H_{n-1}(0) (the m = 1 case of the restriction rule, where
/// the skew factor is one cell): blocks are exactly the modules of the
/// compositions obtained by deleting a removable node.
inline BranchingReport branching_check(const Composition& a) {
  BranchingReport rep;
  rep.dimension = enumerate_srct(a).size();
  std::size_t total = 0;
  for (const Cell& node : removable_parts(a)) {
    rep.reductions.push_back(remove_node(a, node.row));
    rep.reduction_dimensions.push_back(enumerate_srct(rep.reductions.back()).size());
    total += rep.reduction_dimensions.back();
  }
  const RestrictionReport res = restrict_and_verify(a, 1);
  std::vector<Composition> from_blocks;
  bool one_cell_skew = true;
  for (const auto& b : res.blocks) {
    from_blocks.push_back(b.beta);
    one_cell_skew = one_cell_skew && b.skew_dimension == 1;
  }
  std::vector<Composition> sorted_reductions = rep.reductions;
  std::sort(sorted_reductions.begin(), sorted_reductions.end());
  rep.ok = res.ok() && one_cell_skew && total == rep.dimension && from_blocks == sorted_reductions;
  return rep;
}

}  // namespace srct
