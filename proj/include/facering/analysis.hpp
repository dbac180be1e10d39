#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "facering/chain_complex.hpp"
#include "facering/koszul.hpp"
#include "facering/simplicial_complex.hpp"

namespace facering {

/// Topological Cohen-Macaulay verdict: H̃_i(lk σ; k) = 0 for every face σ
/// (including ∅, whose link is Σ itself) and every i < dim lk σ. The witness
/// is the first failure in graded-lex face order.
struct ReisnerVerdict {
  FieldSpec field = FieldSpec::rationals();
  bool is_cm = false;
  std::optional<std::pair<Face, long>> witness;  // (σ, degree i with H̃_i(lk σ) ≠ 0)
};

ReisnerVerdict reisner_criterion(const SimplicialComplex& sc, const FieldSpec& field);

/// One row of the Tor decomposition probe: β_r against the two candidate
/// index conventions Σ_j C(n,j)·h̃^{j-r-1} and Σ_j C(n,j)·h̃^{j+r-1}.
/// `guaranteed` marks r > n - d - 1, the range the vanishing argument covers.
struct ProbeRow {
  long r = 0;
  long beta = 0;
  long rhs_minus = 0;
  long rhs_plus = 0;
  bool match_minus = false;
  bool match_plus = false;
  bool guaranteed = false;
};

struct DecompositionProbe {
  FieldSpec field = FieldSpec::rationals();
  bool ran = false;
  std::string refusal_reason;                     // set when !ran
  std::optional<std::pair<Face, long>> refusal_witness;  // failing link, degree
  std::vector<ProbeRow> rows;
};

/// Reports (never asserts) the decomposition of Tor against reduced
/// cohomology. Requires Σ pure with vanishing link cohomology below top
/// degree at every nonempty face; refuses with a witness otherwise.
DecompositionProbe decomposition_probe(const SimplicialComplex& sc, const FieldSpec& field);

struct FieldReport {
  FieldSpec field = FieldSpec::rationals();
  BettiVector homology;
  BettiVector cohomology;
  BettiTable betti;
  ReisnerVerdict reisner;
  AlgebraicVerdict algebraic;
  bool agree = false;
};

struct AnalysisReport {
  SimplicialComplex complex;
  FVector f_vector;
  int dim = -1;
  bool pure = false;
  std::vector<FieldReport> fields;
  /// Set for non-pure inputs: the theorem is applied through purity there.
  std::optional<std::string> purity_note;
  std::vector<DecompositionProbe> probes;  // per field, when requested
};

/// Runs both verdicts per field. A disagreement on a pure complex throws
/// internal_error: the theorem guarantees equality, so it means an artifact
/// bug. Non-pure complexes are reported without the assertion.
AnalysisReport cross_check(const SimplicialComplex& sc, const std::vector<FieldSpec>& fields,
                           bool with_probe = false);

struct CorpusOptions {
  int max_n = 4;
  int random_count = 0;
  int random_n_lo = 5;
  int random_n_hi = 7;
  std::uint64_t seed = 1;
  std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime(2)};
  /// Sheaf, lemma, hypercohomology and vanishing suites run on complexes
  /// with at most this many vertices.
  int sheaf_max_n = 4;
  int nonsquarefree_samples = 100;
  bool with_sheaf_suites = true;
};

struct SuiteCount {
  long run = 0;
  long passed = 0;
};

struct CorpusSummary {
  CorpusOptions options;
  long exhaustive_items = 0;
  long random_items = 0;
  long pure_items = 0;
  SuiteCount cross_check_pure;
  SuiteCount cross_check_nonpure_agree;  // informational, never asserted
  SuiteCount purity_property;
  SuiteCount hom_eq_cohom;
  SuiteCount lemma_link_ideal;
  SuiteCount lemma_localization;
  SuiteCount sheaf_constant_full;
  SuiteCount sheaf_closed_cover;
  SuiteCount sheaf_constant_punctured;
  SuiteCount sheaf_simple;
  SuiteCount hyper_strand;
  SuiteCount nonsquarefree;
  bool all_passed = true;
};

/// Exhaustive sweep for n ≤ max_n plus seeded random complexes, running the
/// cross-check, the purity property and the oracle suites. Any failure throws
/// internal_error with the offending complex serialized in the message.
CorpusSummary run_corpus(const CorpusOptions& options);

}  // namespace facering
