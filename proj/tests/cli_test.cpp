// Drives the installed binary through the subcommand surface: exit codes,
// artifact handoff between steps, and the step-by-step pipeline the demo
// wraps.
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "rarecause/ranker.hpp"
#include "test_util.hpp"

#ifndef RARECAUSE_CLI_PATH
#define RARECAUSE_CLI_PATH "rarecause"
#endif

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string("\"") + RARECAUSE_CLI_PATH + "\" " +
                          args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return status < 0 ? status : (status >> 8) & 0xff;
}

std::string q(const std::string& path) { return "\"" + path + "\""; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("no arguments and unknown subcommands are usage errors") {
  CHECK(run("") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("--help") == 0);
}

TEST_CASE("validation problems exit with 1") {
  CHECK(run("ingest --corpus /nonexistent/corpus.jsonl") == 1);
  CHECK(run("rank --records missing.jsonl --index missing.json "
            "--keywords missing.json --corpus missing.jsonl --keyword x "
            "--out /dev/null") == 1);
}

TEST_CASE("ingest validates the bundled corpora") {
  CHECK(run("ingest --corpus " + testutil::data_path("demo/corpus.jsonl")) == 0);
  CHECK(run("ingest --corpus " + testutil::data_path("fixtures/corpus.jsonl")) ==
        0);
}

TEST_CASE("the step-by-step pipeline matches the demo wrapper") {
  const fs::path dir = fs::temp_directory_path() / "rarecause_cli_steps";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string demo = testutil::data_path("demo");
  const std::string model = (dir / "model.json").string();
  const std::string records = (dir / "records.jsonl").string();
  const std::string index = (dir / "index.json").string();
  const std::string keywords = (dir / "keywords.json").string();
  const std::string ranking = (dir / "ranking.jsonl").string();
  const std::string baseline = (dir / "baseline.jsonl").string();
  const std::string report = (dir / "report.json").string();

  REQUIRE(run("train --corpus " + q(demo + "/corpus.jsonl") + " --labels " +
              q(demo + "/labels.jsonl") + " --ontology " +
              q(demo + "/ontology.tsv") + " --model " + q(model) +
              " --lambda 1e-4 --epochs 15 --seed 42") == 0);
  REQUIRE(run("extract --corpus " + q(demo + "/corpus.jsonl") + " --clues " +
              q(demo + "/clues.tsv") + " --ontology " +
              q(demo + "/ontology.tsv") + " --model " + q(model) + " --out " +
              q(records)) == 0);
  REQUIRE(run("stats --records " + q(records) + " --corpus " +
              q(demo + "/corpus.jsonl") + " --max-n 3 --out " + q(index)) == 0);
  REQUIRE(run("keywords --corpus " + q(demo + "/corpus.jsonl") +
              " --k 100 --out " + q(keywords)) == 0);
  REQUIRE(run("rank --records " + q(records) + " --index " + q(index) +
              " --keywords " + q(keywords) + " --corpus " +
              q(demo + "/corpus.jsonl") + " --keyword 猛暑 --n 20 --out " +
              q(ranking)) == 0);
  REQUIRE(run("rank --records " + q(records) + " --index " + q(index) +
              " --keywords " + q(keywords) + " --corpus " +
              q(demo + "/corpus.jsonl") + " --keyword 猛暑 --n 20 --baseline "
              "--out " + q(baseline)) == 0);
  REQUIRE(run("eval --ranking " + q(ranking) + " --judgments " +
              q(demo + "/judgments.tsv") + " --out " + q(report)) == 0);

  std::string keyword;
  const auto rows = rarecause::load_ranking(ranking, &keyword);
  CHECK(keyword == "猛暑");
  CHECK(rows.size() <= 20);
  REQUIRE(!rows.empty());
  CHECK(rows[0].record.doc_id == "CP001-17");
  CHECK(std::ifstream(report).good());

  // keyword table listing works off the artifact
  CHECK(run("keywords --show CP001 --top 5 --out " + q(keywords)) == 0);
  CHECK(run("keywords --show NOPE --out " + q(keywords)) == 1);
  fs::remove_all(dir);
}

TEST_CASE("subcommands are idempotent: same inputs, identical artifacts") {
  const fs::path dir = fs::temp_directory_path() / "rarecause_cli_idem";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string demo = testutil::data_path("demo");
  const std::string m1 = (dir / "m1.json").string();
  const std::string m2 = (dir / "m2.json").string();
  REQUIRE(run("train --corpus " + q(demo + "/corpus.jsonl") + " --labels " +
              q(demo + "/labels.jsonl") + " --ontology " +
              q(demo + "/ontology.tsv") + " --model " + q(m1)) == 0);
  REQUIRE(run("train --corpus " + q(demo + "/corpus.jsonl") + " --labels " +
              q(demo + "/labels.jsonl") + " --ontology " +
              q(demo + "/ontology.tsv") + " --model " + q(m2)) == 0);
  std::ifstream f1(m1), f2(m2);
  const std::string c1((std::istreambuf_iterator<char>(f1)),
                       std::istreambuf_iterator<char>());
  const std::string c2((std::istreambuf_iterator<char>(f2)),
                       std::istreambuf_iterator<char>());
  CHECK(c1 == c2);
  CHECK(!c1.empty());
  fs::remove_all(dir);
}

}  // TEST_SUITE
