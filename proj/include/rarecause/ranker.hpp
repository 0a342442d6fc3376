// Rarity ranking of causal records for a query keyword. A record scores
// high when company keywords appear on both sides (harmonic score) while
// its effect n-grams rarely co-occur with the keyword.
#ifndef RARECAUSE_RANKER_HPP
#define RARECAUSE_RANKER_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rarecause/cooccur.hpp"
#include "rarecause/keywords.hpp"
#include "rarecause/patterns.hpp"

namespace rarecause {

struct RarityScore {
  double cooccur_sum = 0.0;      // sum of P(en | w) over effect n-grams
  double cause_kw_score = 0.0;   // summed keyword scores on the cause side
  double effect_kw_score = 0.0;  // summed keyword scores on the effect side
  int cause_kw_hits = 0;
  int effect_kw_hits = 0;
  double harmonic = 0.0;  // weighted harmonic mean of the two sides
  double rarity = 0.0;    // harmonic / cooccur_sum
};

// A record with its noun n-gram sets recovered from the corpus.
struct Candidate {
  CausalRecord record;
  std::set<std::string> cause_ngrams;
  std::set<std::string> effect_ngrams;
};

struct RankedResult {
  CausalRecord record;
  RarityScore score;
  int rank = 0;
};

std::vector<Candidate> make_candidates(const std::vector<CausalRecord>& records,
                                       const std::vector<AnnotatedDocument>& docs,
                                       int max_n);

// 2ab / (a + b) for a = hits_c * score_c, b = hits_e * score_e; zero when
// either side contributes nothing.
double harmonic_score(int cause_hits, double cause_score, int effect_hits,
                      double effect_score);

// Scores one candidate against the keyword, or nullopt when its effect
// n-grams never co-occur with the keyword (rarity undefined).
std::optional<RarityScore> score_record(const Candidate& candidate,
                                        const std::string& keyword,
                                        const CooccurrenceIndex& index,
                                        const KeywordStore& tables);

// Candidates whose cause n-grams include the keyword, rarity descending,
// ties by (doc_id, sentence), top n.
std::vector<RankedResult> rank_rare(const std::string& keyword,
                                    const std::vector<Candidate>& candidates,
                                    const CooccurrenceIndex& index,
                                    const KeywordStore& tables, int n);

// Same candidate filter, ordered by co-occurrence sum ascending (the
// smallest co-occurrence is the rarest), top n.
std::vector<RankedResult> rank_baseline(const std::string& keyword,
                                        const std::vector<Candidate>& candidates,
                                        const CooccurrenceIndex& index,
                                        const KeywordStore& tables, int n);

// Ranking file: JSON Lines with the full score breakdown per row.
void write_ranking(const std::vector<RankedResult>& results,
                   const std::string& keyword, const std::string& path);
std::vector<RankedResult> load_ranking(const std::string& path,
                                       std::string* keyword = nullptr);

}  // namespace rarecause

#endif  // RARECAUSE_RANKER_HPP
