#include "facering/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace facering {

SimplicialComplex complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("facets"))
    throw std::invalid_argument("input must be an object with \"n\" and \"facets\"");
  if (!j["n"].is_number_integer()) throw std::invalid_argument("\"n\" must be an integer");
  const int n = j["n"].get<int>();
  if (!j["facets"].is_array()) throw std::invalid_argument("\"facets\" must be an array");
  std::vector<Face> facets;
  for (const Json& jf : j["facets"]) {
    if (!jf.is_array()) throw std::invalid_argument("each facet must be an array of vertices");
    std::vector<int> verts;
    for (const Json& jv : jf) {
      if (!jv.is_number_integer()) throw std::invalid_argument("vertices must be integers");
      verts.push_back(jv.get<int>());
    }
    facets.emplace_back(std::move(verts));
  }
  return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex complex_from_json_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  return complex_from_json(j);
}

Json complex_to_json(const SimplicialComplex& sc) {
  Json facets = Json::array();
  for (const Face& f : sc.facets()) facets.push_back(f.vertices());
  return Json{{"n", sc.vertex_count()}, {"facets", facets}};
}

Json betti_vector_to_json(const BettiVector& v) {
  return Json{{"lo", v.lo()}, {"dims", v.dims()}};
}

Json betti_table_to_json(const BettiTable& t, bool per_degree) {
  Json j{{"beta", t.beta},
         {"projdim", t.projective_dimension()},
         {"depth", t.depth()}};
  if (per_degree) {
    Json rows = Json::array();
    for (const auto& [mask, dims] : t.per_degree)
      rows.push_back(Json{{"support", Face::from_mask(mask).vertices()}, {"dims", dims}});
    j["per_degree"] = rows;
  }
  return j;
}

Json reisner_verdict_to_json(const ReisnerVerdict& v) {
  Json j{{"is_cm", v.is_cm}};
  if (v.witness)
    j["witness"] = Json{{"face", v.witness->first.vertices()}, {"degree", v.witness->second}};
  return j;
}

Json algebraic_verdict_to_json(const AlgebraicVerdict& v) {
  Json j{{"is_cm", v.is_cm},
         {"depth", v.depth},
         {"projdim", v.projdim},
         {"krull_dim", v.krull_dim}};
  if (v.witness_i) j["witness_i"] = *v.witness_i;
  return j;
}

Json probe_to_json(const DecompositionProbe& p) {
  Json j{{"field", p.field.name()}, {"ran", p.ran}};
  if (!p.ran) {
    j["refusal_reason"] = p.refusal_reason;
    if (p.refusal_witness)
      j["refusal_witness"] = Json{{"face", p.refusal_witness->first.vertices()},
                                  {"degree", p.refusal_witness->second}};
    return j;
  }
  Json rows = Json::array();
  for (const ProbeRow& r : p.rows)
    rows.push_back(Json{{"r", r.r},
                        {"beta", r.beta},
                        {"rhs_minus", r.rhs_minus},
                        {"rhs_plus", r.rhs_plus},
                        {"match_minus", r.match_minus},
                        {"match_plus", r.match_plus},
                        {"guaranteed", r.guaranteed}});
  j["rows"] = rows;
  return j;
}

Json analysis_report_to_json(const AnalysisReport& r, bool per_degree) {
  Json j{{"input", complex_to_json(r.complex)},
         {"dim", r.dim},
         {"pure", r.pure},
         {"f_vector", r.f_vector.counts}};
  if (r.purity_note) j["purity_note"] = *r.purity_note;
  Json fields = Json::array();
  for (const FieldReport& fr : r.fields) {
    fields.push_back(Json{{"field", fr.field.name()},
                          {"reduced_homology", betti_vector_to_json(fr.homology)},
                          {"reduced_cohomology", betti_vector_to_json(fr.cohomology)},
                          {"betti", betti_table_to_json(fr.betti, per_degree)},
                          {"reisner", reisner_verdict_to_json(fr.reisner)},
                          {"algebraic", algebraic_verdict_to_json(fr.algebraic)},
                          {"agree", fr.agree}});
  }
  j["fields"] = fields;
  if (!r.probes.empty()) {
    Json probes = Json::array();
    for (const DecompositionProbe& p : r.probes) probes.push_back(probe_to_json(p));
    j["probe"] = probes;
  }
  return j;
}

namespace {

Json suite_to_json(const SuiteCount& c) { return Json{{"run", c.run}, {"passed", c.passed}}; }

}  // namespace

Json corpus_summary_to_json(const CorpusSummary& s) {
  Json fields = Json::array();
  for (const FieldSpec& f : s.options.fields) fields.push_back(f.name());
  return Json{{"options",
               Json{{"max_n", s.options.max_n},
                    {"random", s.options.random_count},
                    {"random_n_lo", s.options.random_n_lo},
                    {"random_n_hi", s.options.random_n_hi},
                    {"seed", s.options.seed},
                    {"fields", fields},
                    {"sheaf_max_n", s.options.sheaf_max_n},
                    {"nonsquarefree_samples", s.options.nonsquarefree_samples},
                    {"with_sheaf_suites", s.options.with_sheaf_suites}}},
              {"exhaustive_items", s.exhaustive_items},
              {"random_items", s.random_items},
              {"pure_items", s.pure_items},
              {"checks",
               Json{{"cross_check_pure", suite_to_json(s.cross_check_pure)},
                    {"cross_check_nonpure_agree", suite_to_json(s.cross_check_nonpure_agree)},
                    {"purity_property", suite_to_json(s.purity_property)},
                    {"hom_eq_cohom", suite_to_json(s.hom_eq_cohom)},
                    {"lemma_link_ideal", suite_to_json(s.lemma_link_ideal)},
                    {"lemma_localization", suite_to_json(s.lemma_localization)},
                    {"sheaf_constant_full", suite_to_json(s.sheaf_constant_full)},
                    {"sheaf_closed_cover", suite_to_json(s.sheaf_closed_cover)},
                    {"sheaf_constant_punctured", suite_to_json(s.sheaf_constant_punctured)},
                    {"sheaf_simple", suite_to_json(s.sheaf_simple)},
                    {"hyper_strand", suite_to_json(s.hyper_strand)},
                    {"nonsquarefree", suite_to_json(s.nonsquarefree)}}},
              {"all_passed", s.all_passed}};
}

std::vector<FieldSpec> parse_field_list(const std::string& csv) {
  std::vector<FieldSpec> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "q" || item == "Q") {
      out.push_back(FieldSpec::rationals());
    } else if (item.size() > 2 && (item.rfind("gf", 0) == 0 || item.rfind("GF", 0) == 0)) {
      out.push_back(FieldSpec::prime(std::stoull(item.substr(2))));
    } else {
      throw std::invalid_argument("unknown field '" + item + "' (use q, gf2, gf3, gf<p>)");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty field list");
  return out;
}

}  // namespace facering
