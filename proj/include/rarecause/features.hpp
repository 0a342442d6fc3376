// Feature extraction for (sentence, clue) candidates. Feature keys are
// namespaced by family:
//   pp:p1|p2    particle pair, core side x base-point side
//   sem:c1|c2   concept tuple from the ontology, core side x base-point side
//   posb:TAG    part of speech of the morpheme right before the clue
//   clue:SURF   the clue itself
//   uni:L bi:L1|L2  lemma unigrams and adjacent bigrams over the sentence
#ifndef RARECAUSE_FEATURES_HPP
#define RARECAUSE_FEATURES_HPP

#include <map>
#include <string>

#include "rarecause/corpus.hpp"

namespace rarecause {

struct FeatureVector {
  std::map<std::string, int> values;

  void bump(const std::string& key, int by = 1) { values[key] += by; }
};

FeatureVector extract_features(const Sentence& sentence,
                               const ClueMatch& match,
                               const Ontology& ontology);

}  // namespace rarecause

#endif  // RARECAUSE_FEATURES_HPP
