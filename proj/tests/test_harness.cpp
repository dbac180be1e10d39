#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "facering/analysis.hpp"
#include "facering/homology.hpp"
#include "facering/json_io.hpp"

using namespace facering;

namespace {

SimplicialComplex make(int n, const std::vector<std::vector<int>>& facets) {
  std::vector<Face> fs;
  for (const auto& f : facets) fs.emplace_back(f);
  return SimplicialComplex::from_facets(n, fs);
}

const std::vector<std::vector<int>> kRp2Facets = {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5},
                                                  {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 5},
                                                  {2, 4, 5}, {3, 4, 5}};

const std::vector<FieldSpec> kAllFields = {FieldSpec::rationals(), FieldSpec::prime(2),
                                           FieldSpec::prime(3)};

}  // namespace

TEST_CASE("reisner criterion verdicts") {
  for (const FieldSpec& field : kAllFields)
    CHECK(reisner_criterion(make(3, {{0, 1}, {1, 2}, {0, 2}}), field).is_cm);

  const ReisnerVerdict edges = reisner_criterion(make(4, {{0, 1}, {2, 3}}), FieldSpec::rationals());
  CHECK_FALSE(edges.is_cm);
  REQUIRE(edges.witness.has_value());
  CHECK(edges.witness->first == Face{});
  CHECK(edges.witness->second == 0);

  const ReisnerVerdict rp2 = reisner_criterion(make(6, kRp2Facets), FieldSpec::prime(2));
  CHECK_FALSE(rp2.is_cm);
  REQUIRE(rp2.witness.has_value());
  CHECK(rp2.witness->first == Face{});
  CHECK(rp2.witness->second == 1);
}

TEST_CASE("witnesses are verifiable") {
  for (const auto& sc : {make(4, {{0, 1}, {2, 3}}), make(6, kRp2Facets), make(4, {{0, 1, 2}, {3}})})
    for (const FieldSpec& field : kAllFields) {
      const ReisnerVerdict v = reisner_criterion(sc, field);
      if (!v.witness) continue;
      const SimplicialComplex link = sc.link(v.witness->first).complex;
      CHECK(reduced_homology(link, field).at(static_cast<int>(v.witness->second)) != 0);
      CHECK(v.witness->second < link.dim());
    }
}

TEST_CASE("cross check agreement") {
  const AnalysisReport full = cross_check(make(3, {{0, 1, 2}}), kAllFields);
  CHECK(full.pure);
  for (const FieldReport& fr : full.fields) {
    CHECK(fr.reisner.is_cm);
    CHECK(fr.algebraic.is_cm);
    CHECK(fr.agree);
  }

  const AnalysisReport edges = cross_check(make(4, {{0, 1}, {2, 3}}), kAllFields);
  for (const FieldReport& fr : edges.fields) {
    CHECK_FALSE(fr.reisner.is_cm);
    CHECK_FALSE(fr.algebraic.is_cm);
    CHECK(fr.agree);
  }

  const AnalysisReport rp2 = cross_check(make(6, kRp2Facets), kAllFields);
  CHECK(rp2.fields[0].reisner.is_cm);       // Q
  CHECK_FALSE(rp2.fields[1].reisner.is_cm); // GF(2)
  CHECK(rp2.fields[2].reisner.is_cm);       // GF(3)
  for (const FieldReport& fr : rp2.fields) CHECK(fr.agree);
  CHECK(rp2.fields[1].algebraic.depth == 2);
  CHECK(rp2.fields[1].algebraic.krull_dim == 3);
}

TEST_CASE("non-pure complexes are reported without the assertion") {
  const AnalysisReport mixed = cross_check(make(4, {{0, 1, 2}, {3}}), kAllFields);
  CHECK_FALSE(mixed.pure);
  CHECK(mixed.purity_note.has_value());
  for (const FieldReport& fr : mixed.fields) {
    CHECK_FALSE(fr.reisner.is_cm);  // non-pure complexes always fail the criterion
  }
}

TEST_CASE("decomposition probe on the hollow triangle") {
  const DecompositionProbe probe =
      decomposition_probe(make(3, {{0, 1}, {1, 2}, {0, 2}}), FieldSpec::rationals());
  REQUIRE(probe.ran);
  REQUIRE(probe.rows.size() == 4);
  CHECK(probe.rows[0].beta == 1);
  CHECK(probe.rows[0].rhs_minus == 3);  // the formula cannot hold at r = 0
  CHECK_FALSE(probe.rows[0].match_minus);
  CHECK(probe.rows[1].beta == 1);
  CHECK(probe.rows[1].rhs_minus == 1);  // C(3,3)·h̃^1
  CHECK(probe.rows[1].match_minus);
  CHECK_FALSE(probe.rows[1].match_plus);
  for (std::size_t r = 2; r < 4; ++r) {
    CHECK(probe.rows[r].guaranteed);
    CHECK(probe.rows[r].match_minus);
  }
}

TEST_CASE("decomposition probe on the tetrahedron boundary") {
  const DecompositionProbe probe = decomposition_probe(
      make(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}), FieldSpec::rationals());
  REQUIRE(probe.ran);
  CHECK(probe.rows[1].beta == 1);
  CHECK(probe.rows[1].rhs_minus == 1);  // C(4,4)·h̃^2
  CHECK(probe.rows[1].match_minus);
  for (std::size_t r = 2; r <= 4; ++r) {
    CHECK(probe.rows[r].beta == 0);
    CHECK(probe.rows[r].match_minus);
  }
}

TEST_CASE("decomposition probe on the full simplex") {
  const DecompositionProbe probe = decomposition_probe(make(3, {{0, 1, 2}}), FieldSpec::rationals());
  REQUIRE(probe.ran);
  for (std::size_t r = 1; r < probe.rows.size(); ++r) {
    CHECK(probe.rows[r].match_minus);
    CHECK(probe.rows[r].match_plus);
    CHECK(probe.rows[r].beta == 0);
  }
}

TEST_CASE("decomposition probe refusals") {
  const DecompositionProbe nonpure =
      decomposition_probe(make(4, {{0, 1, 2}, {3}}), FieldSpec::rationals());
  CHECK_FALSE(nonpure.ran);
  CHECK(nonpure.refusal_reason == "complex is not pure");

  // Two triangles sharing a vertex: pure, but the link of the shared vertex
  // is disconnected.
  const DecompositionProbe wedge =
      decomposition_probe(make(5, {{0, 1, 2}, {2, 3, 4}}), FieldSpec::rationals());
  CHECK_FALSE(wedge.ran);
  REQUIRE(wedge.refusal_witness.has_value());
  CHECK(wedge.refusal_witness->first == Face({2}));
  CHECK(wedge.refusal_witness->second == 0);
}

TEST_CASE("corpus run at small scale") {
  CorpusOptions opt;
  opt.max_n = 3;
  opt.fields = {FieldSpec::rationals(), FieldSpec::prime(2)};
  opt.seed = 5;
  opt.nonsquarefree_samples = 25;
  const CorpusSummary summary = run_corpus(opt);
  CHECK(summary.exhaustive_items == 13);  // 1 + 1 + 2 + 9
  CHECK(summary.all_passed);
  CHECK(summary.cross_check_pure.run == summary.cross_check_pure.passed);
  CHECK(summary.hyper_strand.run > 0);
  CHECK(summary.lemma_link_ideal.run > 0);
}

TEST_CASE("corpus summaries are byte-identical for fixed options") {
  CorpusOptions opt;
  opt.max_n = 2;
  opt.random_count = 6;
  opt.random_n_lo = 5;
  opt.random_n_hi = 6;
  opt.seed = 31337;
  opt.fields = {FieldSpec::rationals(), FieldSpec::prime(2)};
  opt.nonsquarefree_samples = 10;
  const std::string a = corpus_summary_to_json(run_corpus(opt)).dump(2);
  const std::string b = corpus_summary_to_json(run_corpus(opt)).dump(2);
  CHECK(a == b);
  CHECK(a.find("\"all_passed\": true") != std::string::npos);
}

TEST_CASE("json input parsing") {
  const SimplicialComplex sc = complex_from_json_text(R"({"n":4,"facets":[[0,1],[2,3]]})");
  CHECK(sc == make(4, {{0, 1}, {2, 3}}));
  CHECK(complex_from_json_text(R"({"n":0,"facets":[[]]})") == SimplicialComplex{});

  CHECK_THROWS_AS(complex_from_json_text("not json"), std::invalid_argument);
  CHECK_THROWS_AS(complex_from_json_text(R"({"facets":[[0]]})"), std::invalid_argument);
  CHECK_THROWS_AS(complex_from_json_text(R"({"n":2,"facets":[[1,0]]})"), std::invalid_argument);
  CHECK_THROWS_AS(complex_from_json_text(R"({"n":2,"facets":[[0,5]]})"), std::invalid_argument);
  CHECK_THROWS_AS(complex_from_json_text(R"({"n":2,"facets":"x"})"), std::invalid_argument);

  // Round trip.
  CHECK(complex_from_json(complex_to_json(sc)) == sc);
}

TEST_CASE("field list parsing") {
  const auto fields = parse_field_list("q,gf2,gf3");
  REQUIRE(fields.size() == 3);
  CHECK(fields[0].is_rationals());
  CHECK(fields[1].p() == 2);
  CHECK(fields[2].p() == 3);
  CHECK(parse_field_list("gf7919")[0].p() == 7919);
  CHECK_THROWS_AS(parse_field_list("gf4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_field_list("zzz"), std::invalid_argument);
  CHECK_THROWS_AS(parse_field_list(""), std::invalid_argument);
}

TEST_CASE("analysis report serialization is deterministic") {
  const AnalysisReport report = cross_check(make(3, {{0, 1}, {1, 2}, {0, 2}}), kAllFields, true);
  const std::string a = analysis_report_to_json(report, true).dump(2);
  const std::string b =
      analysis_report_to_json(cross_check(make(3, {{0, 1}, {1, 2}, {0, 2}}), kAllFields, true), true)
          .dump(2);
  CHECK(a == b);
  CHECK(a.find("\"probe\"") != std::string::npos);
  CHECK(a.find("\"per_degree\"") != std::string::npos);
}
