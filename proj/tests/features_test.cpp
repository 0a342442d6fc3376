#include <doctest.h>

#include "rarecause/corpus.hpp"
#include "rarecause/features.hpp"
#include "test_util.hpp"

using namespace rarecause;
using testutil::fixture_path;

namespace {

struct Loaded {
  std::vector<AnnotatedDocument> docs;
  ClueLexicon lexicon;
  Ontology ontology;
};

Loaded load() {
  return {parse_corpus(fixture_path("corpus.jsonl")),
          load_clue_lexicon(fixture_path("clues.tsv")),
          load_ontology(fixture_path("ontology.tsv"))};
}

const AnnotatedDocument& doc_by_id(const std::vector<AnnotatedDocument>& docs,
                                   const std::string& id) {
  for (const auto& d : docs)
    if (d.doc_id == id) return d;
  REQUIRE(false);
  return docs.front();
}

}  // namespace

TEST_SUITE("features") {

TEST_CASE("hand-enumerated vector for 円高のため、日本経済は悪化した。") {
  const auto f = load();
  const Sentence& s = doc_by_id(f.docs, "FIX-E").sentences[0];
  const auto matches = find_clues(s, f.lexicon);
  REQUIRE(matches.size() == 1);
  const FeatureVector fv = extract_features(s, matches[0], f.ontology);

  // Enumerated by hand over the fixture annotation.
  const std::map<std::string, int> expected = {
      {"pp:の|は", 1},
      {"sem:為替|経済", 1},
      {"sem:経済|経済", 1},
      {"posb:particle", 1},
      {"clue:ため", 1},
      {"uni:円高", 1},
      {"uni:の", 1},
      {"uni:ため", 1},
      {"uni:、", 1},
      {"uni:日本経済", 1},
      {"uni:は", 1},
      {"uni:悪化", 1},
      {"uni:する", 1},
      {"uni:た", 1},
      {"uni:。", 1},
      {"bi:円高|の", 1},
      {"bi:の|ため", 1},
      {"bi:ため|、", 1},
      {"bi:、|日本経済", 1},
      {"bi:日本経済|は", 1},
      {"bi:は|悪化", 1},
      {"bi:悪化|する", 1},
      {"bi:する|た", 1},
      {"bi:た|。", 1},
  };
  CHECK(fv.values == expected);
}

TEST_CASE("no ontology entries means no sem features") {
  const auto f = load();
  const Sentence& s = doc_by_id(f.docs, "FIX-E").sentences[0];
  const auto matches = find_clues(s, f.lexicon);
  REQUIRE(matches.size() == 1);
  const FeatureVector fv = extract_features(s, matches[0], Ontology{});
  for (const auto& [key, value] : fv.values)
    CHECK(key.rfind("sem:", 0) != 0);
}

TEST_CASE("every vector has exactly one clue: and one posb: feature") {
  const auto f = load();
  for (const auto& doc : f.docs) {
    for (const auto& s : doc.sentences) {
      for (const auto& match : find_clues(s, f.lexicon)) {
        const FeatureVector fv = extract_features(s, match, f.ontology);
        int clue = 0, posb = 0;
        for (const auto& [key, value] : fv.values) {
          if (key.rfind("clue:", 0) == 0) clue += value;
          if (key.rfind("posb:", 0) == 0) posb += value;
        }
        CHECK(clue == 1);
        CHECK(posb == 1);
      }
    }
  }
}

TEST_CASE("sentence-initial clue gets posb:BOS") {
  const auto f = load();
  const Sentence& s = doc_by_id(f.docs, "FIX-X").sentences[1];
  const auto matches = find_clues(s, f.lexicon);
  REQUIRE(matches.size() == 1);
  REQUIRE(matches[0].clue_surface == "このため");
  const FeatureVector fv = extract_features(s, matches[0], f.ontology);
  CHECK(fv.values.count("posb:BOS") == 1);
}

TEST_CASE("extraction is a pure function") {
  const auto f = load();
  const Sentence& s = doc_by_id(f.docs, "FIX-A").sentences[0];
  const auto matches = find_clues(s, f.lexicon);
  REQUIRE(matches.size() == 1);
  const FeatureVector a = extract_features(s, matches[0], f.ontology);
  const FeatureVector b = extract_features(s, matches[0], f.ontology);
  CHECK(a.values == b.values);
}

TEST_CASE("particle pairs multiply across the clue boundary") {
  const auto f = load();
  const Sentence& s = doc_by_id(f.docs, "FIX-A").sentences[0];
  const auto matches = find_clues(s, f.lexicon);
  REQUIRE(matches.size() == 1);
  const FeatureVector fv = extract_features(s, matches[0], f.ontology);
  // Core side particles: の, の, を, に; base side: の, が.
  CHECK(fv.values.at("pp:の|が") == 2);
  CHECK(fv.values.at("pp:の|の") == 2);
  CHECK(fv.values.at("pp:を|が") == 1);
  CHECK(fv.values.at("pp:に|の") == 1);
  int pp_total = 0;
  for (const auto& [key, value] : fv.values)
    if (key.rfind("pp:", 0) == 0) pp_total += value;
  CHECK(pp_total == 4 * 2);
}

}  // TEST_SUITE
