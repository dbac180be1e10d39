#include "facering/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "facering/closed_cover.hpp"
#include "facering/generators.hpp"
#include "facering/homology.hpp"
#include "facering/monomial_ideal.hpp"
#include "facering/poset_sheaf.hpp"
#include "facering/sheaf_complex.hpp"

namespace facering {

ReisnerVerdict reisner_criterion(const SimplicialComplex& sc, const FieldSpec& field) {
  ReisnerVerdict v;
  v.field = field;
  v.is_cm = true;
  for (const Face& sigma : sc.faces()) {
    const SimplicialComplex link = sc.link(sigma).complex;
    const int top = link.dim();
    const BettiVector h = reduced_homology(link, field);
    for (int i = h.lo(); i < top; ++i) {
      if (h.at(i) != 0) {
        v.is_cm = false;
        v.witness = {sigma, i};
        return v;
      }
    }
  }
  return v;
}

namespace {

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

DecompositionProbe decomposition_probe(const SimplicialComplex& sc, const FieldSpec& field) {
  DecompositionProbe probe;
  probe.field = field;
  if (!sc.is_pure()) {
    probe.refusal_reason = "complex is not pure";
    return probe;
  }
  // Vanishing of link cohomology below top degree, nonempty faces only: the
  // statement assumes it, and the σ = ∅ case is exactly what the probe is
  // comparing against.
  for (const Face& sigma : sc.faces()) {
    if (sigma.empty()) continue;
    const SimplicialComplex link = sc.link(sigma).complex;
    const BettiVector h = reduced_cohomology(link, field);
    for (int i = h.lo(); i < link.dim(); ++i) {
      if (h.at(i) != 0) {
        probe.refusal_reason = "link condition fails on a nonempty face";
        probe.refusal_witness = {sigma, i};
        return probe;
      }
    }
  }
  probe.ran = true;

  const int n = sc.vertex_count();
  const int d = sc.dim();
  const BettiTable table = betti_numbers(sc, field);
  const BettiVector coh = reduced_cohomology(sc, field);
  for (int r = 0; r <= n; ++r) {
    ProbeRow row;
    row.r = r;
    row.beta = table.beta[static_cast<std::size_t>(r)];
    for (int j = 0; j <= n; ++j) {
      row.rhs_minus += binomial(n, j) * coh.at(j - r - 1);
      row.rhs_plus += binomial(n, j) * coh.at(j + r - 1);
    }
    row.match_minus = row.beta == row.rhs_minus;
    row.match_plus = row.beta == row.rhs_plus;
    row.guaranteed = r > n - d - 1;
    probe.rows.push_back(row);
  }
  return probe;
}

AnalysisReport cross_check(const SimplicialComplex& sc, const std::vector<FieldSpec>& fields,
                           bool with_probe) {
  AnalysisReport report;
  report.complex = sc;
  report.f_vector = sc.f_vector();
  report.dim = sc.dim();
  report.pure = sc.is_pure();
  if (!report.pure)
    report.purity_note =
        "non-pure complex: a Cohen-Macaulay complex is pure, so the equivalence is not asserted";

  for (const FieldSpec& field : fields) {
    FieldReport fr;
    fr.field = field;
    fr.homology = reduced_homology(sc, field);
    fr.cohomology = reduced_cohomology(sc, field);
    fr.betti = betti_numbers(sc, field);
    fr.reisner = reisner_criterion(sc, field);
    fr.algebraic = is_cm_algebraic(sc, field);
    fr.agree = fr.reisner.is_cm == fr.algebraic.is_cm;
    if (report.pure && !fr.agree)
      throw internal_error("main theorem violated on a pure complex over " + field.name() + ": " +
                           sc.to_string());
    report.fields.push_back(std::move(fr));
    if (with_probe) report.probes.push_back(decomposition_probe(sc, field));
  }
  return report;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

void fail_corpus(const std::string& suite, const SimplicialComplex& sc, const std::string& extra) {
  std::ostringstream os;
  os << "corpus check '" << suite << "' failed on " << sc.to_string();
  if (!extra.empty()) os << " (" << extra << ")";
  throw internal_error(os.str());
}

struct CorpusRunner {
  const CorpusOptions& opt;
  CorpusSummary& summary;

  void check(SuiteCount& counter, bool ok, const char* suite, const SimplicialComplex& sc,
             const std::string& extra = "") {
    ++counter.run;
    if (!ok) {
      summary.all_passed = false;
      fail_corpus(suite, sc, extra);
    }
    ++counter.passed;
  }

  void visit(const SimplicialComplex& sc) {
    const bool pure = sc.is_pure();
    if (pure) ++summary.pure_items;

    for (const FieldSpec& field : opt.fields) {
      const ReisnerVerdict rv = reisner_criterion(sc, field);
      const AlgebraicVerdict av = is_cm_algebraic(sc, field);

      check(summary.purity_property, !rv.is_cm || pure, "reisner-true complexes are pure", sc,
            field.name());
      if (pure) {
        check(summary.cross_check_pure, rv.is_cm == av.is_cm, "main theorem equivalence", sc,
              field.name());
      } else {
        ++summary.cross_check_nonpure_agree.run;
        if (rv.is_cm == av.is_cm) ++summary.cross_check_nonpure_agree.passed;
      }

      check(summary.hom_eq_cohom,
            reduced_homology(sc, field) == reduced_cohomology(sc, field),
            "homology and cohomology dimensions agree", sc, field.name());
    }

    if (!opt.with_sheaf_suites || sc.vertex_count() > opt.sheaf_max_n) return;

    // Lemma suites are field-free.
    for (const Face& sigma : sc.faces()) {
      const auto [direct, via_star] = link_ideal_two_ways(sc, sigma);
      check(summary.lemma_link_ideal, direct == via_star, "link ideal two ways", sc,
            sigma.to_string());
      check(summary.lemma_localization, localization_identity_check(sc, sigma),
            "localization identity", sc, sigma.to_string());
    }

    for (const FieldSpec& field : opt.fields) {
      const FacePoset full = FacePoset::all_faces(sc);
      const BettiVector constant = sheaf_cohomology(constant_sheaf(full, 1, field));
      bool ok = constant.at(0) == 1;
      for (int i = 1; i <= constant.hi(); ++i) ok = ok && constant.at(i) == 0;
      check(summary.sheaf_constant_full, ok, "constant sheaf on the full poset is acyclic", sc,
            field.name());

      if (sc.vertex_count() >= 1) {
        const BettiVector cover = closed_cover_cohomology(sc, field, 1);
        check(summary.sheaf_closed_cover, cover == reduced_cohomology(sc, field),
              "closed cover cohomology equals reduced cohomology", sc, field.name());

        const BettiVector punctured =
            sheaf_cohomology(constant_sheaf(FacePoset::nonempty_faces(sc), 1, field));
        const BettiVector reduced = reduced_cohomology(sc, field);
        bool pok = punctured.at(0) == reduced.at(0) + 1;
        const int hi = std::max(punctured.hi(), reduced.hi());
        for (int i = 1; i <= hi; ++i) pok = pok && punctured.at(i) == reduced.at(i);
        check(summary.sheaf_constant_punctured, pok,
              "punctured constant sheaf matches reduced cohomology", sc, field.name());
      }

      for (const Face& sigma : sc.faces())
        check(summary.sheaf_simple, simple_sheaf_cohomology_check(sc, sigma, 1, field),
              "simple sheaf lemma", sc, sigma.to_string() + " over " + field.name());
    }

    // Hypercohomology/strand agreement and non-squarefree vanishing over the
    // first field: the suites above already vary the characteristic.
    const FieldSpec& field0 = opt.fields.front();
    const int n = sc.vertex_count();
    const std::uint32_t total = (n == 0) ? 1u : (1u << n);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      const MultiDegree a = MultiDegree::squarefree(n, Face::from_mask(mask));
      const BettiVector hyper = hypercohomology(koszul_sheaf_strand(sc, a, field0));
      const BettiVector strand = koszul_strand(sc, a, field0).homology_dims();
      bool ok = true;
      for (int i = std::min(hyper.lo(), -strand.hi()); i <= std::max(hyper.hi(), -strand.lo()); ++i)
        ok = ok && hyper.at(i) == strand.at(-i);
      check(summary.hyper_strand, ok, "hypercohomology equals strand homology", sc,
            a.to_string() + " over " + field0.name());
    }

    check(summary.nonsquarefree,
          nonsquarefree_vanishing_check(sc, field0, opt.nonsquarefree_samples,
                                        splitmix64(opt.seed ^ 0xABCDull)),
          "non-squarefree strands vanish", sc, field0.name());
  }
};

}  // namespace

CorpusSummary run_corpus(const CorpusOptions& options) {
  CorpusSummary summary;
  summary.options = options;
  CorpusRunner runner{options, summary};

  for (int n = 0; n <= options.max_n; ++n) {
    for_each_complex(n, [&](const SimplicialComplex& sc) {
      ++summary.exhaustive_items;
      runner.visit(sc);
    }, options.max_n);
  }

  const int span = std::max(1, options.random_n_hi - options.random_n_lo + 1);
  static constexpr double kDensities[] = {0.15, 0.3, 0.45, 0.6, 0.8};
  for (int i = 0; i < options.random_count; ++i) {
    const int n = options.random_n_lo + (i % span);
    const double density = kDensities[(i / span) % 5];
    const SimplicialComplex sc =
        random_complex(n, density, splitmix64(options.seed + static_cast<std::uint64_t>(i)));
    ++summary.random_items;
    runner.visit(sc);
  }
  return summary;
}

}  // namespace facering
