// Syntactic patterns A-E over clue matches: rule selection by clue position
// and cause/effect span assembly from the dependency tree.
#ifndef RARECAUSE_PATTERNS_HPP
#define RARECAUSE_PATTERNS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rarecause/classifier.hpp"
#include "rarecause/corpus.hpp"

namespace rarecause {

enum class CluePosition { Medial, SentenceFinal, SentenceInitial };

enum class SpanSide { Core, BasePoint, PreviousSentence };

const char* clue_position_name(CluePosition p);
const char* span_side_name(SpanSide s);

struct PatternRule {
  std::string id;  // A..E
  CluePosition clue_position = CluePosition::Medial;
  SpanSide cause_side = SpanSide::Core;
  SpanSide effect_side = SpanSide::BasePoint;
  bool cross_sentence = false;
  // When non-empty, the rule only applies to these clue surfaces.
  std::vector<std::string> clue_surfaces;
};

struct CausalRecord {
  std::string cause;
  std::string effect;
  std::string company_id;
  std::string doc_id;
  int sentence_index = 0;
  std::string clue_surface;
  std::string pattern_id;
};

// Where the clue sits in its sentence; drives rule selection.
CluePosition clue_position_of(const Sentence& sentence, const ClueMatch& match);

// Built-in defaults for the five rules. patternC_swap restores the literal
// labeling of the sentence-final pattern (topic side as cause).
std::vector<PatternRule> default_rules(bool pattern_c_swap = false);

// Rules file: JSON array of objects mirroring PatternRule. Throws on
// invalid side combinations.
std::vector<PatternRule> load_rules(const std::string& path);
void save_rules(const std::vector<PatternRule>& rules, const std::string& path);

// First rule (in order) whose clue position matches; cross-sentence rules
// require a previous sentence, clue_surfaces filters apply.
std::optional<PatternRule> select_pattern(const Sentence& sentence,
                                          const ClueMatch& match,
                                          const std::vector<PatternRule>& rules);

// Cause and effect texts for a selected rule, or nullopt when a required
// side comes out empty.
std::optional<std::pair<std::string, std::string>> extract_spans(
    const AnnotatedDocument& doc, const ClueMatch& match,
    const PatternRule& rule);

// Full step-2 pipeline over a corpus. A null model disables the classifier
// filter (every clue match is kept as a candidate).
std::vector<CausalRecord> extract_all(const std::vector<AnnotatedDocument>& docs,
                                      const ClueLexicon& lexicon,
                                      const Ontology& ontology,
                                      const LinearModel* model,
                                      const std::vector<PatternRule>& rules);

// Records file: JSON Lines.
void write_records(const std::vector<CausalRecord>& records,
                   const std::string& path);
std::vector<CausalRecord> load_records(const std::string& path);

}  // namespace rarecause

#endif  // RARECAUSE_PATTERNS_HPP
