#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "srct/verify.hpp"

namespace srct::cli {

enum Exit { ok = 0, verification = 1, usage = 2 };

namespace detail {

struct Options {
  std::string shape, skew, tableau, format = "text", out_path, suite, family;
  int n = 5, k = 0, cls = -1, sweep = 0;
};

inline void print_tableaux(std::ostream& os, const std::vector<Tableau>& ts, const std::string& format) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& t : ts) arr.push_back(tableau_detail(t));
    os << arr.dump(2) << "\n";
    return;
  }
  for (const auto& t : ts) os << t.to_string() << "\n";
  os << "# " << ts.size() << " tableaux\n";
}

template <typename Basis>
void print_qsym(std::ostream& os, const QuasiSym<Basis>& q, const std::string& format) {
  if (format == "json")
    os << json(q).dump(2) << "\n";
  else if (q.is_zero())
    os << "0\n";
  else
    for (const auto& [a, c] : q.sorted_terms()) os << c << " F(" << a.to_string() << ")\n";
}

inline Tableau parse_tableau(const Composition& shape, const std::string& skew, const std::string& text) {
  const Composition inner = Composition::parse(skew);
  auto rows = parse_rows(text);
  if (auto v = validate_tableau(shape, inner, rows); !v) throw invalid_input(std::string("not a tableau (") + rule_name(v.rule) + "): " + v.detail);
  return Tableau(shape, inner, rows);
}

inline std::vector<int> parameters(const Options& o) {
  if (o.family == "rectangle") return {o.n, o.k};
  return {o.family == "threes" ? o.k : o.n};
}

inline Family parse_family(const std::string& f) {
  if (f == "threes") return Family::threes;
  if (f == "staircase_double") return Family::staircase_double;
  if (f == "rectangle") return Family::rectangle;
  throw invalid_input("unknown family " + f);
}

}  // namespace detail

/// Parses argv and runs one subcommand. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combinatorics of the 0-Hecke action on standard reverse composition tableaux", "srct"};
  app.require_subcommand(1);
  detail::Options o;
  auto shape_opt = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--shape", o.shape, "composition, e.g. 3,2,4");
    if (required) opt->required();
  };
  auto format_opt = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
  };

  auto* en = app.add_subcommand("enum", "list SRCT(alpha)");
  shape_opt(en);
  format_opt(en, {"text", "json"});
  auto* skew_en = app.add_subcommand("skew-enum", "list skew SRCTs of shape alpha//beta");
  shape_opt(skew_en);
  skew_en->add_option("--skew", o.skew, "inner composition")->required();
  format_opt(skew_en, {"text", "json"});
  auto* classes = app.add_subcommand("classes", "equivalence classes with source, sink and DRN");
  shape_opt(classes);
  format_opt(classes, {"text", "json"});
  auto* orb = app.add_subcommand("orbit", "flip orbit of a tableau");
  shape_opt(orb);
  orb->add_option("--tableau", o.tableau, "rows separated by '/', e.g. 5,4,2/9,7,6,3")->required();
  format_opt(orb, {"text", "json"});
  auto* qs = app.add_subcommand("qs", "quasisymmetric Schur function in the F basis");
  shape_opt(qs);
  format_opt(qs, {"text", "json"});
  auto* canon = app.add_subcommand("canonical", "canonical quasisymmetric function in the F basis");
  shape_opt(canon);
  format_opt(canon, {"text", "json"});
  auto* skew_qs = app.add_subcommand("skew-qs", "skew quasisymmetric Schur function");
  shape_opt(skew_qs);
  skew_qs->add_option("--skew", o.skew, "inner composition")->required();
  format_opt(skew_qs, {"text", "json"});
  auto* poset = app.add_subcommand("poset", "flip poset of one class");
  shape_opt(poset);
  poset->add_option("--class", o.cls, "class index (default: the class of the canonical tableau)");
  format_opt(poset, {"dot", "json"});
  auto* module = app.add_subcommand("module", "explicit generator matrices");
  shape_opt(module);
  module->add_option("--skew", o.skew, "inner composition");
  module->add_option("--out", o.out_path, "write JSON to this file");
  format_opt(module, {"text", "json"});
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suite_names;
  for (const auto& [name, _] : suites()) suite_names.push_back(name);
  verify->add_option("--suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names));
  verify->add_option("--n", o.n, "size bound")->check(CLI::Range(1, 12));
  format_opt(verify, {"text", "json"});
  auto* counts = app.add_subcommand("counts", "closed-form counts against enumeration");
  counts->add_option("--family", o.family, "threes | staircase_double | rectangle")
      ->required()
      ->check(CLI::IsMember({"threes", "staircase_double", "rectangle"}));
  counts->add_option("--k", o.k, "k for threes and rectangle")->check(CLI::PositiveNumber);
  counts->add_option("--n", o.n, "n for staircase_double and rectangle")->check(CLI::PositiveNumber);
  counts->add_option("--sweep", o.sweep, "all parameters 1..SWEEP (k for threes and rectangle, n for staircase_double)");
  format_opt(counts, {"text", "json", "tsv"});
  auto* conj = app.add_subcommand("conjecture", "rank vectors and unimodality of all class posets");
  conj->add_option("--n", o.n, "size bound")->check(CLI::Range(1, 12));
  format_opt(conj, {"text", "json", "tsv"});

  std::vector<std::string> args(argv + 1, argv + argc);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }

  try {
    const Composition shape = Composition::parse(o.shape);
    if (*en) {
      detail::print_tableaux(out, enumerate_srct(shape), o.format);
    } else if (*skew_en) {
      detail::print_tableaux(out, enumerate_skew_srct({shape, Composition::parse(o.skew)}), o.format);
    } else if (*classes) {
      const auto cs = equivalence_classes(shape);
      if (o.format == "json") {
        out << json(cs).dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < cs.size(); ++i) {
          const auto& c = cs[i];
          out << "class " << i << ": " << c.key() << "\n  size " << c.members.size() << "\n  source " << c.source.to_string()
              << "\n  sink   " << c.sink.to_string() << "\n  drn   ";
          for (int d : c.drn) out << " " << d;
          out << "\n";
        }
      }
    } else if (*orb) {
      detail::print_tableaux(out, orbit(detail::parse_tableau(shape, "", o.tableau)), o.format);
    } else if (*qs) {
      detail::print_qsym(out, quasisymmetric_schur(shape), o.format);
    } else if (*canon) {
      detail::print_qsym(out, canonical_qsym(shape), o.format);
    } else if (*skew_qs) {
      detail::print_qsym(out, skew_quasisymmetric_schur({shape, Composition::parse(o.skew)}), o.format);
    } else if (*poset) {
      const auto cs = equivalence_classes(shape);
      const SrctClass* pick = nullptr;
      if (o.cls < 0) {
        const Tableau canon_t = canonical_tableau(shape);
        for (const auto& c : cs)
          if (c.contains(canon_t)) pick = &c;
      } else if (static_cast<std::size_t>(o.cls) < cs.size()) {
        pick = &cs[static_cast<std::size_t>(o.cls)];
      } else {
        throw invalid_input("class index out of range (" + std::to_string(cs.size()) + " classes)");
      }
      const FinitePoset p = flip_poset(*pick);
      if (o.format == "json")
        out << json(p).dump(2) << "\n";
      else
        out << p.to_dot(shape.to_string());
    } else if (*module) {
      const HeckeModule m = o.skew.empty() ? build_module(shape) : build_skew_module({shape, Composition::parse(o.skew)});
      if (!o.out_path.empty()) {
        std::ofstream f(o.out_path);
        if (!f) throw invalid_input("cannot write " + o.out_path);
        f << json(m).dump(2) << "\n";
      }
      if (o.format == "json" && o.out_path.empty()) {
        out << json(m).dump(2) << "\n";
      } else {
        out << "dimension " << m.dimension() << "\n";
        for (std::size_t k = 0; k < m.dimension(); ++k) out << "  e" << k << " = " << m.basis[k].to_string() << "\n";
        for (int i = 1; i < m.degree; ++i) {
          out << "A_" << i << ":";
          const IntMatrix& g = m.generator(i);
          for (std::size_t c = 0; c < g.cols(); ++c) {
            std::string img = "0";
            for (std::size_t r = 0; r < g.rows(); ++r)
              if (g(r, c)) img = "e" + std::to_string(r);
            out << " e" << c << "->" << img;
          }
          out << "\n";
        }
      }
    } else if (*verify) {
      SuiteResult r;
      for (const auto& [name, fn] : suites())
        if (name == o.suite) r = fn(o.n);
      if (o.format == "json") {
        out << json(r).dump(2) << "\n";
      } else {
        out << (r.ok() ? "ok" : "FAILED") << " suite=" << r.suite << " n=" << r.n << " checked=" << r.checked << "\n";
        if (r.failure) out << json(*r.failure).dump() << "\n";
      }
      if (!r.ok()) {
        err << json(*r.failure).dump() << "\n";
        return verification;
      }
    } else if (*counts) {
      const Family fam = detail::parse_family(o.family);
      std::vector<CountReport> reps;
      if (o.sweep > 0) {
        for (int p = 1; p <= o.sweep; ++p) {
          if (fam == Family::rectangle)
            reps.push_back(count_formulas(fam, {o.n, p}));
          else
            reps.push_back(count_formulas(fam, {p}));
        }
      } else {
        const auto params = detail::parameters(o);
        for (int p : params)
          if (p < 1) throw invalid_input("missing --k or --n for family " + o.family);
        reps.push_back(count_formulas(fam, params));
      }
      bool all = true;
      if (o.format == "tsv") out << "family\tparameter\tshape\tformula\tenumerated\ttruncated\tmatch\n";
      json arr = json::array();
      for (const auto& r : reps) {
        all = all && r.match();
        const json j = r;
        if (o.format == "tsv") {
          out << j["family"].get<std::string>() << "\t" << j["parameter"].dump() << "\t" << r.shape.to_string() << "\t"
              << r.formula << "\t" << r.enumerated << "\t" << (r.truncated_count ? r.truncated_count->str() : "") << "\t"
              << (r.match() ? "true" : "false") << "\n";
        } else if (o.format == "text") {
          out << j.dump() << "\n";
        } else {
          arr.push_back(j);
        }
      }
      if (o.format == "json") out << (reps.size() == 1 ? arr[0] : arr).dump(2) << "\n";
      if (!all) return verification;
    } else if (*conj) {
      const auto recs = rank_sweep(o.n);
      std::size_t non_unimodal = 0, non_symmetric = 0;
      for (const auto& r : recs) {
        non_unimodal += !r.unimodal;
        non_symmetric += !r.symmetric;
      }
      if (o.format == "json") {
        json j = json::object();
        j["n"] = o.n;
        j["classes"] = recs;
        j["non_symmetric"] = non_symmetric;
        j["non_unimodal"] = non_unimodal;
        out << j.dump(2) << "\n";
      } else {
        if (o.format == "tsv") out << "shape\tclass\tsize\trank_vector\tsymmetric\tunimodal\n";
        for (const auto& r : recs) {
          if (o.format == "text" && r.symmetric && r.unimodal) continue;
          out << r.shape.to_string() << "\t" << r.class_key << "\t" << r.size << "\t" << json(r.ranks).dump() << "\t"
              << (r.symmetric ? "symmetric" : "not-symmetric") << "\t" << (r.unimodal ? "unimodal" : "NOT-UNIMODAL") << "\n";
        }
        if (o.format == "text")
          out << "# " << recs.size() << " classes, " << non_symmetric << " not rank-symmetric, " << non_unimodal
              << " not rank-unimodal\n";
      }
    }
  } catch (const invalid_input& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const verification_failure& e) {
    json w = json::object();
    w["shape"] = o.shape;
    w["detail"] = e.what();
    err << w.dump() << "\n";
    return verification;
  }
  return ok;
}

}  // namespace srct::cli
