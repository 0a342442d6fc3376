// Noun n-gram co-occurrence statistics over extracted records. N-gram keys
// are lemmas joined by a single space.
#ifndef RARECAUSE_COOCCUR_HPP
#define RARECAUSE_COOCCUR_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rarecause/corpus.hpp"
#include "rarecause/patterns.hpp"

namespace rarecause {

// Every sub-window of length <= max_n over contiguous noun runs,
// de-duplicated.
std::set<std::string> noun_ngrams(const std::vector<Morpheme>& morphemes,
                                  int max_n);

struct CooccurrenceIndex {
  int max_n = 3;
  // records whose cause expression contains the n-gram
  std::map<std::string, long> cause_count;
  // records where (cause n-gram, effect n-gram) co-occur
  std::map<std::pair<std::string, std::string>, long> pair_count;

  void merge(const CooccurrenceIndex& other);
};

// The contiguous morpheme run in the given sentence (or its predecessor,
// where cross-sentence spans land) whose surfaces concatenate to `text`.
// Throws when the record cannot be located in the corpus.
std::vector<Morpheme> recover_span_morphemes(const AnnotatedDocument& doc,
                                             int sentence_index,
                                             const std::string& text);

// Per-record set semantics: each distinct cause n-gram counts once per
// record, each distinct (cause, effect) pair once per record.
CooccurrenceIndex build_index(const std::vector<CausalRecord>& records,
                              const std::vector<AnnotatedDocument>& docs,
                              int max_n);

// pair_count / cause_count, 0 for an unseen cause n-gram.
double conditional_probability(const CooccurrenceIndex& index,
                               const std::string& cause_ngram,
                               const std::string& effect_ngram);

void save_index(const CooccurrenceIndex& index, const std::string& path);
CooccurrenceIndex load_index(const std::string& path);

}  // namespace rarecause

#endif  // RARECAUSE_COOCCUR_HPP
