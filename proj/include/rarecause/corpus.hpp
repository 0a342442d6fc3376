// Annotated-corpus data model: morphemes, chunks, dependency-linked
// sentences, clue lexicons and the word->concept ontology, plus the
// JSONL corpus reader/writer and clue locating primitives.
#ifndef RARECAUSE_CORPUS_HPP
#define RARECAUSE_CORPUS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rarecause {

enum class Pos {
  Noun,
  Particle,
  Verb,
  Adjective,
  Auxiliary,
  Symbol,
  Other,
};

const char* pos_name(Pos pos);
std::optional<Pos> pos_from_name(const std::string& name);

inline bool is_content(Pos pos) {
  return pos == Pos::Noun || pos == Pos::Verb || pos == Pos::Adjective;
}

struct Morpheme {
  std::string surface;
  Pos pos = Pos::Other;
  std::string base;  // lemma
};

constexpr int kRootHead = -1;

struct Chunk {
  std::vector<Morpheme> morphemes;
  int head = kRootHead;  // index of governing chunk, kRootHead for root

  bool is_root() const { return head == kRootHead; }
  // Concatenated morpheme surfaces.
  std::string surface() const;
  // True when every morpheme is a symbol (standalone punctuation chunk).
  bool punctuation_only() const;
};

struct Sentence {
  std::vector<Chunk> chunks;
  int index = 0;  // ordinal within the document

  std::string surface() const;
  const Chunk& last_chunk() const { return chunks.back(); }
};

struct AnnotatedDocument {
  std::string doc_id;
  std::string company_id;
  std::vector<Sentence> sentences;
};

struct ClueEntry {
  std::string surface;
  bool sentence_final_only = false;
  bool cross_sentence = false;
};

struct ClueLexicon {
  std::vector<ClueEntry> entries;

  const ClueEntry* find(const std::string& surface) const;
};

// One located clue occurrence. The span is a half-open morpheme range
// [begin, end) inside chunks[chunk_index].
struct ClueMatch {
  int sentence_index = 0;
  int chunk_index = 0;
  int begin = 0;
  int end = 0;
  std::string clue_surface;
};

// lemma -> concept chain, ordered specific to general
using Ontology = std::map<std::string, std::vector<std::string>>;

// JSONL corpus, one document per line. Throws std::runtime_error naming
// the offending line (and doc_id for dependency-structure violations).
std::vector<AnnotatedDocument> parse_corpus(const std::string& path);
std::vector<AnnotatedDocument> parse_corpus_text(const std::string& text);
void write_corpus(const std::vector<AnnotatedDocument>& docs,
                  const std::string& path);
std::string corpus_to_jsonl(const std::vector<AnnotatedDocument>& docs);

// Clue lexicon file: one entry per line, "surface<TAB>flags" where flags is
// a comma-separated subset of {final, xsent}.
ClueLexicon load_clue_lexicon(const std::string& path);

// Ontology file: "lemma<TAB>concept1>concept2>..." per line.
Ontology load_ontology(const std::string& path);

// All occurrences of lexicon surfaces as contiguous morpheme runs within a
// chunk, left to right; at each position the longest entry wins and
// scanning resumes past it. Entries flagged sentence_final_only match only
// in the last chunk.
std::vector<ClueMatch> find_clues(const Sentence& sentence,
                                  const ClueLexicon& lexicon);

// The chunk holding the clue; its "last part" runs from the clue span to
// the chunk end.
int locate_core_phrase(const Sentence& sentence, const ClueMatch& match);

// The chunk the core phrase depends on, or nullopt when the core is root.
std::optional<int> locate_base_point(const Sentence& sentence, int core);

}  // namespace rarecause

#endif  // RARECAUSE_CORPUS_HPP
