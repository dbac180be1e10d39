// Command-line workbench: analyze simplicial complexes from JSON files,
// cross-check the topological and algebraic Cohen-Macaulay verdicts, sweep
// corpora, and exercise the sheaf-engine oracles.
//
// Exit codes: 0 success, 1 input error, 2 internal assertion (an identity the
// theory guarantees failed, i.e. a bug in the artifact, not in the input).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "facering/analysis.hpp"
#include "facering/closed_cover.hpp"
#include "facering/homology.hpp"
#include "facering/json_io.hpp"
#include "facering/poset_sheaf.hpp"
#include "facering/sheaf_complex.hpp"

namespace {

facering::SimplicialComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return facering::complex_from_json_text(buf.str());
}

void emit(const facering::Json& j) { std::cout << j.dump(2) << "\n"; }

int run_analyze(const std::string& path, const std::string& fields_csv, bool probe,
                bool per_degree) {
  const auto sc = load_complex(path);
  const auto fields = facering::parse_field_list(fields_csv);
  const auto report = facering::cross_check(sc, fields, probe);
  emit(facering::analysis_report_to_json(report, per_degree));
  return 0;
}

int run_cross_check(const std::string& path, const std::string& fields_csv) {
  const auto sc = load_complex(path);
  const auto fields = facering::parse_field_list(fields_csv);
  const auto report = facering::cross_check(sc, fields);
  facering::Json out{{"input", facering::complex_to_json(sc)}, {"pure", report.pure}};
  facering::Json rows = facering::Json::array();
  bool all = true;
  for (const auto& fr : report.fields) {
    rows.push_back(facering::Json{{"field", fr.field.name()},
                                  {"reisner_cm", fr.reisner.is_cm},
                                  {"algebraic_cm", fr.algebraic.is_cm},
                                  {"agree", fr.agree}});
    all = all && fr.agree;
  }
  out["fields"] = rows;
  out["all_agree"] = all;
  emit(out);
  return 0;
}

int run_tor(const std::string& path, const std::string& fields_csv, bool per_degree, bool csv) {
  const auto sc = load_complex(path);
  const auto fields = facering::parse_field_list(fields_csv);
  if (csv) {
    std::cout << "field,i,beta\n";
    for (const auto& field : fields) {
      const auto table = facering::betti_numbers(sc, field);
      for (std::size_t i = 0; i < table.beta.size(); ++i)
        std::cout << field.name() << ',' << i << ',' << table.beta[i] << "\n";
      if (per_degree) {
        std::cout << "field,support,i,dim\n";
        for (const auto& [mask, dims] : table.per_degree)
          for (std::size_t i = 0; i < dims.size(); ++i)
            if (dims[i] != 0)
              std::cout << field.name() << ',' << facering::Face::from_mask(mask).to_string()
                        << ',' << i << ',' << dims[i] << "\n";
      }
    }
    return 0;
  }
  facering::Json out{{"input", facering::complex_to_json(sc)}};
  facering::Json rows = facering::Json::array();
  for (const auto& field : fields) {
    const auto table = facering::betti_numbers(sc, field);
    facering::Json row{{"field", field.name()}};
    row.update(facering::betti_table_to_json(table, per_degree));
    rows.push_back(row);
  }
  out["fields"] = rows;
  emit(out);
  return 0;
}

int run_sheaf_test(const std::string& path, const std::string& fields_csv) {
  using namespace facering;
  const auto sc = load_complex(path);
  const auto fields = parse_field_list(fields_csv);
  Json out{{"input", complex_to_json(sc)}};
  Json rows = Json::array();
  for (const auto& field : fields) {
    const FacePoset full = FacePoset::all_faces(sc);
    const BettiVector constant = sheaf_cohomology(constant_sheaf(full, 1, field));
    bool constant_ok = constant.at(0) == 1;
    for (int i = 1; i <= constant.hi(); ++i) constant_ok = constant_ok && constant.at(i) == 0;

    bool cover_ok = true;
    bool punctured_ok = true;
    if (sc.vertex_count() >= 1) {
      cover_ok = closed_cover_cohomology(sc, field, 1) == reduced_cohomology(sc, field);
      const BettiVector punctured =
          sheaf_cohomology(constant_sheaf(FacePoset::nonempty_faces(sc), 1, field));
      const BettiVector reduced = reduced_cohomology(sc, field);
      punctured_ok = punctured.at(0) == reduced.at(0) + 1;
      for (int i = 1; i <= std::max(punctured.hi(), reduced.hi()); ++i)
        punctured_ok = punctured_ok && punctured.at(i) == reduced.at(i);
    }

    bool simple_ok = true;
    for (const Face& sigma : sc.faces())
      simple_ok = simple_ok && simple_sheaf_cohomology_check(sc, sigma, 1, field);

    bool hyper_ok = true;
    const int n = sc.vertex_count();
    const std::uint32_t total = (n == 0) ? 1u : (1u << n);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      const MultiDegree a = MultiDegree::squarefree(n, Face::from_mask(mask));
      const BettiVector hyper = hypercohomology(koszul_sheaf_strand(sc, a, field));
      const BettiVector strand = koszul_strand(sc, a, field).homology_dims();
      for (int i = std::min(hyper.lo(), -strand.hi()); i <= std::max(hyper.hi(), -strand.lo()); ++i)
        hyper_ok = hyper_ok && hyper.at(i) == strand.at(-i);
    }

    rows.push_back(Json{{"field", field.name()},
                        {"constant_sheaf_acyclic", constant_ok},
                        {"closed_cover_matches_reduced", cover_ok},
                        {"punctured_constant_matches_reduced", punctured_ok},
                        {"simple_sheaf_lemma", simple_ok},
                        {"hypercohomology_matches_strands", hyper_ok}});
  }
  out["fields"] = rows;
  emit(out);
  return 0;
}

int run_corpus_cmd(int max_n, int random_count, std::uint64_t seed, const std::string& fields_csv,
                   int sheaf_max_n, int nonsq_samples) {
  facering::CorpusOptions opt;
  opt.max_n = max_n;
  opt.random_count = random_count;
  opt.seed = seed;
  opt.fields = facering::parse_field_list(fields_csv);
  opt.sheaf_max_n = sheaf_max_n;
  opt.nonsquarefree_samples = nonsq_samples;
  const auto summary = facering::run_corpus(opt);
  emit(facering::corpus_summary_to_json(summary));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stanley-Reisner Cohen-Macaulay workbench"};
  app.require_subcommand(1);

  std::string path;
  std::string fields_csv = "q,gf2,gf3";
  bool probe = false;
  bool per_degree = false;
  bool csv = false;

  auto* analyze = app.add_subcommand("analyze", "full report for one complex");
  analyze->add_option("file", path, "input JSON file")->required();
  analyze->add_option("--fields", fields_csv, "comma-separated fields (q, gf2, gf3, gf<p>)");
  analyze->add_flag("--probe", probe, "include the Tor decomposition probe");
  analyze->add_flag("--per-degree", per_degree, "include the multigraded Betti breakdown");

  auto* cross = app.add_subcommand("cross-check", "both CM verdicts per field");
  cross->add_option("file", path, "input JSON file")->required();
  cross->add_option("--fields", fields_csv, "comma-separated fields");

  std::string tor_fields = "q,gf2,gf3";
  auto* tor = app.add_subcommand("tor", "Betti numbers of the face ring");
  tor->add_option("file", path, "input JSON file")->required();
  tor->add_option("--fields", tor_fields, "comma-separated fields");
  tor->add_flag("--per-degree", per_degree, "include the multigraded breakdown");
  tor->add_flag("--csv", csv, "tabular output instead of JSON");

  std::string sheaf_fields = "q,gf2";
  auto* sheaf = app.add_subcommand("sheaf-test", "sheaf-engine oracle suites on one complex");
  sheaf->add_option("file", path, "input JSON file")->required();
  sheaf->add_option("--fields", sheaf_fields, "comma-separated fields");

  int max_n = 4;
  int random_count = 0;
  std::uint64_t seed = 1;
  std::string corpus_fields = "q,gf2";
  int sheaf_max_n = 4;
  int nonsq_samples = 100;
  auto* corpus = app.add_subcommand("corpus", "exhaustive + random sweep with all suites");
  corpus->add_option("--max-n", max_n, "exhaustive sweep bound");
  corpus->add_option("--random", random_count, "number of seeded random complexes");
  corpus->add_option("--seed", seed, "random seed");
  corpus->add_option("--fields", corpus_fields, "comma-separated fields");
  corpus->add_option("--sheaf-max-n", sheaf_max_n, "vertex bound for sheaf/lemma suites");
  corpus->add_option("--nonsq-samples", nonsq_samples, "samples per complex for the vanishing check");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(path, fields_csv, probe, per_degree);
    if (cross->parsed()) return run_cross_check(path, fields_csv);
    if (tor->parsed()) return run_tor(path, tor_fields, per_degree, csv);
    if (sheaf->parsed()) return run_sheaf_test(path, sheaf_fields);
    if (corpus->parsed())
      return run_corpus_cmd(max_n, random_count, seed, corpus_fields, sheaf_max_n, nonsq_samples);
  } catch (const facering::internal_error& e) {
    std::cerr << "internal assertion: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
