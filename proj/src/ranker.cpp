#include "rarecause/ranker.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace rarecause {

using nlohmann::json;

std::vector<Candidate> make_candidates(const std::vector<CausalRecord>& records,
                                       const std::vector<AnnotatedDocument>& docs,
                                       int max_n) {
  std::map<std::string, const AnnotatedDocument*> by_id;
  for (const auto& doc : docs) by_id[doc.doc_id] = &doc;
  std::vector<Candidate> candidates;
  candidates.reserve(records.size());
  for (const auto& record : records) {
    auto it = by_id.find(record.doc_id);
    if (it == by_id.end())
      throw std::runtime_error("record references unknown document '" +
                               record.doc_id + "'");
    Candidate c;
    c.record = record;
    c.cause_ngrams = noun_ngrams(
        recover_span_morphemes(*it->second, record.sentence_index, record.cause),
        max_n);
    c.effect_ngrams = noun_ngrams(
        recover_span_morphemes(*it->second, record.sentence_index,
                               record.effect),
        max_n);
    candidates.push_back(std::move(c));
  }
  return candidates;
}

double harmonic_score(int cause_hits, double cause_score, int effect_hits,
                      double effect_score) {
  const double a = cause_hits * cause_score;
  const double b = effect_hits * effect_score;
  if (a + b == 0.0) return 0.0;
  return 2.0 * a * b / (a + b);
}

std::optional<RarityScore> score_record(const Candidate& candidate,
                                        const std::string& keyword,
                                        const CooccurrenceIndex& index,
                                        const KeywordStore& tables) {
  static const CompanyKeywordTable kEmpty;
  auto table_it = tables.find(candidate.record.company_id);
  const CompanyKeywordTable& table =
      table_it == tables.end() ? kEmpty : table_it->second;

  RarityScore score;
  for (const auto& cn : candidate.cause_ngrams) {
    const double s = keyword_score(table, cn);
    if (s > 0.0) {
      score.cause_kw_score += s;
      score.cause_kw_hits += 1;
    }
  }
  for (const auto& en : candidate.effect_ngrams) {
    score.cooccur_sum += conditional_probability(index, keyword, en);
    const double s = keyword_score(table, en);
    if (s > 0.0) {
      score.effect_kw_score += s;
      score.effect_kw_hits += 1;
    }
  }
  if (score.cooccur_sum == 0.0) return std::nullopt;
  score.harmonic = harmonic_score(score.cause_kw_hits, score.cause_kw_score,
                                  score.effect_kw_hits, score.effect_kw_score);
  score.rarity = score.harmonic / score.cooccur_sum;
  return score;
}

namespace {

std::vector<RankedResult> rank_common(
    const std::string& keyword, const std::vector<Candidate>& candidates,
    const CooccurrenceIndex& index, const KeywordStore& tables, int n,
    bool baseline) {
  if (n < 1) throw std::invalid_argument("rank: n must be >= 1");
  std::vector<RankedResult> results;
  for (const auto& candidate : candidates) {
    if (candidate.cause_ngrams.count(keyword) == 0) continue;
    const auto score = score_record(candidate, keyword, index, tables);
    if (!score) continue;
    results.push_back(RankedResult{candidate.record, *score, 0});
  }
  std::sort(results.begin(), results.end(),
            [baseline](const RankedResult& a, const RankedResult& b) {
              if (baseline) {
                if (a.score.cooccur_sum != b.score.cooccur_sum)
                  return a.score.cooccur_sum < b.score.cooccur_sum;
              } else {
                if (a.score.rarity != b.score.rarity)
                  return a.score.rarity > b.score.rarity;
              }
              if (a.record.doc_id != b.record.doc_id)
                return a.record.doc_id < b.record.doc_id;
              return a.record.sentence_index < b.record.sentence_index;
            });
  if (static_cast<int>(results.size()) > n) results.resize(n);
  for (size_t i = 0; i < results.size(); ++i)
    results[i].rank = static_cast<int>(i) + 1;
  return results;
}

}  // namespace

std::vector<RankedResult> rank_rare(const std::string& keyword,
                                    const std::vector<Candidate>& candidates,
                                    const CooccurrenceIndex& index,
                                    const KeywordStore& tables, int n) {
  return rank_common(keyword, candidates, index, tables, n, false);
}

std::vector<RankedResult> rank_baseline(const std::string& keyword,
                                        const std::vector<Candidate>& candidates,
                                        const CooccurrenceIndex& index,
                                        const KeywordStore& tables, int n) {
  return rank_common(keyword, candidates, index, tables, n, true);
}

void write_ranking(const std::vector<RankedResult>& results,
                   const std::string& keyword, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write ranking file: " + path);
  for (const auto& r : results) {
    out << json{{"rank", r.rank},
                {"keyword", keyword},
                {"cause", r.record.cause},
                {"effect", r.record.effect},
                {"company_id", r.record.company_id},
                {"doc_id", r.record.doc_id},
                {"sentence", r.record.sentence_index},
                {"clue", r.record.clue_surface},
                {"pattern", r.record.pattern_id},
                {"cooccur_sum", r.score.cooccur_sum},
                {"cause_kw_score", r.score.cause_kw_score},
                {"effect_kw_score", r.score.effect_kw_score},
                {"cause_kw_hits", r.score.cause_kw_hits},
                {"effect_kw_hits", r.score.effect_kw_hits},
                {"harmonic", r.score.harmonic},
                {"rarity", r.score.rarity}}
               .dump()
        << '\n';
  }
}

std::vector<RankedResult> load_ranking(const std::string& path,
                                       std::string* keyword) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open ranking file: " + path);
  std::vector<RankedResult> results;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw std::runtime_error("ranking file " + path + " line " +
                               std::to_string(lineno) + ": " + e.what());
    }
    RankedResult r;
    r.rank = j.value("rank", 0);
    r.record.cause = j.value("cause", std::string());
    r.record.effect = j.value("effect", std::string());
    r.record.company_id = j.value("company_id", std::string());
    r.record.doc_id = j.value("doc_id", std::string());
    r.record.sentence_index = j.value("sentence", 0);
    r.record.clue_surface = j.value("clue", std::string());
    r.record.pattern_id = j.value("pattern", std::string());
    r.score.cooccur_sum = j.value("cooccur_sum", 0.0);
    r.score.cause_kw_score = j.value("cause_kw_score", 0.0);
    r.score.effect_kw_score = j.value("effect_kw_score", 0.0);
    r.score.cause_kw_hits = j.value("cause_kw_hits", 0);
    r.score.effect_kw_hits = j.value("effect_kw_hits", 0);
    r.score.harmonic = j.value("harmonic", 0.0);
    r.score.rarity = j.value("rarity", 0.0);
    if (keyword != nullptr) *keyword = j.value("keyword", std::string());
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace rarecause
