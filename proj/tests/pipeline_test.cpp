#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "rarecause/pipeline.hpp"
#include "test_util.hpp"

using namespace rarecause;
using testutil::data_path;

TEST_SUITE("pipeline") {

TEST_CASE("config file paths resolve against the config directory") {
  const auto config = load_config(data_path("demo/config.json"));
  CHECK(config.keyword == "猛暑");
  CHECK(config.cutoff == 20);
  CHECK(config.max_n == 3);
  CHECK(config.idf_mode == IdfMode::Companies);
  CHECK(std::filesystem::exists(config.paths.corpus));
  CHECK(std::filesystem::exists(config.paths.clues));
  CHECK(std::filesystem::exists(config.paths.labels));
}

TEST_CASE("labeled examples load with both classes present") {
  const auto config = load_config(data_path("demo/config.json"));
  const auto docs = parse_corpus(config.paths.corpus);
  const auto ontology = load_ontology(config.paths.ontology);
  const auto examples =
      load_labeled_examples(docs, ontology, config.paths.labels);
  CHECK(examples.size() >= 50);
  int causal = 0;
  for (const auto& ex : examples) causal += ex.causal ? 1 : 0;
  CHECK(causal > 0);
  CHECK(causal < static_cast<int>(examples.size()));
}

TEST_CASE("label rows pointing nowhere are rejected") {
  const auto config = load_config(data_path("demo/config.json"));
  const auto docs = parse_corpus(config.paths.corpus);
  const std::string path = "labels_bad.jsonl";
  {
    std::ofstream out(path);
    out << R"({"doc_id":"NOPE","sentence":0,"clue_chunk":0,)"
        << R"("clue_surface":"ため","label":1})" << '\n';
  }
  CHECK_THROWS_WITH_AS(load_labeled_examples(docs, Ontology{}, path),
                       doctest::Contains("NOPE"), std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("corpus summary counts the demo corpus") {
  const auto config = load_config(data_path("demo/config.json"));
  const auto docs = parse_corpus(config.paths.corpus);
  const std::string summary = corpus_summary(docs);
  CHECK(summary.find("documents: 200") != std::string::npos);
  CHECK(summary.find("companies: 8") != std::string::npos);
}

TEST_CASE("demo pipeline ranks the planted pairs as designed") {
  const auto config = load_config(data_path("demo/config.json"));
  const std::string out_dir = "pipeline_demo_out";
  const std::string log = run_demo(config, out_dir);
  CHECK(log.find("method ranking") != std::string::npos);

  std::string keyword;
  const auto method =
      load_ranking(out_dir + "/ranking_method.jsonl", &keyword);
  CHECK(keyword == "猛暑");
  REQUIRE(!method.empty());
  // The company-keyword-bearing pair wins under the method...
  CHECK(method[0].record.doc_id == "CP001-17");
  CHECK(method[0].score.harmonic > 0.0);

  const auto baseline =
      load_ranking(out_dir + "/ranking_baseline.jsonl", &keyword);
  REQUIRE(baseline.size() == method.size());
  // ...while the low-co-occurrence common pair outranks it in the baseline.
  int rank_common = 0, rank_rare_record = 0;
  for (const auto& row : baseline) {
    if (row.record.doc_id == "CP002-17") rank_common = row.rank;
    if (row.record.doc_id == "CP001-17") rank_rare_record = row.rank;
  }
  REQUIRE(rank_common > 0);
  REQUIRE(rank_rare_record > 0);
  CHECK(rank_common < rank_rare_record);

  // Eight hot-summer records survive end to end.
  CHECK(method.size() == 8);
  std::filesystem::remove_all(out_dir);
}

}  // TEST_SUITE
