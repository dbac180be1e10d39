#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "facering/analysis.hpp"
#include "facering/simplicial_complex.hpp"

namespace facering {

using Json = nlohmann::ordered_json;

/// Parses {"n": <int>, "facets": [[<int>...], ...]}; 0-based, strictly
/// increasing vertex lists. {"n":0,"facets":[[]]} is the irrelevant complex.
/// Throws std::invalid_argument on malformed input.
SimplicialComplex complex_from_json(const Json& j);
SimplicialComplex complex_from_json_text(const std::string& text);

Json complex_to_json(const SimplicialComplex& sc);
Json betti_vector_to_json(const BettiVector& v);
Json betti_table_to_json(const BettiTable& t, bool per_degree);
Json reisner_verdict_to_json(const ReisnerVerdict& v);
Json algebraic_verdict_to_json(const AlgebraicVerdict& v);
Json probe_to_json(const DecompositionProbe& p);
Json analysis_report_to_json(const AnalysisReport& r, bool per_degree);
Json corpus_summary_to_json(const CorpusSummary& s);

std::vector<FieldSpec> parse_field_list(const std::string& csv);

}  // namespace facering
