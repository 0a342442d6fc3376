// Per-company keyword scoring: words that occur frequently and evenly
// across one company's documents while staying rare corpus-wide.
// W(w) = TF(w) * H(w) * log2(N / df(w)), normalized by the per-company max.
#ifndef RARECAUSE_KEYWORDS_HPP
#define RARECAUSE_KEYWORDS_HPP

#include <map>
#include <string>
#include <vector>

#include "rarecause/corpus.hpp"

namespace rarecause {

// N in the idf term: companies is what the scoring formula states, files
// switches to the total document count.
enum class IdfMode { Companies, Files };

struct CompanyDocSet {
  std::string company_id;
  std::vector<std::string> docs;
  // word -> doc_id -> occurrence count, noun lemmas only
  std::map<std::string, std::map<std::string, long>> word_doc_counts;
  // corpus-wide document frequency
  std::map<std::string, long> df;
  long idf_total = 1;  // N
};

struct CompanyKeywordTable {
  std::string company_id;
  std::map<std::string, double> entries;  // word -> Score in [0, 1]
  int cap = 100;                          // K
};

using KeywordStore = std::map<std::string, CompanyKeywordTable>;

std::map<std::string, CompanyDocSet> build_company_doc_sets(
    const std::vector<AnnotatedDocument>& docs, IdfMode mode);

// H(w) = -sum_d P(w,d) log2 P(w,d); throws when w occurs in none of the
// company's documents.
double word_entropy(const CompanyDocSet& set, const std::string& word);

// TF * H * log2(N / df); a negative idf (df > N under the literal mode)
// clamps to 0. Throws when df(w) = 0.
double word_weight(const CompanyDocSet& set, const std::string& word);

// Top-K words by Score = W / max W, ties broken lexicographically; empty
// when every weight is zero.
CompanyKeywordTable build_keyword_table(const CompanyDocSet& set, int k);

// Table score, or 0 for words outside the table.
double keyword_score(const CompanyKeywordTable& table, const std::string& word);

void save_keyword_store(const KeywordStore& store, int k,
                        const std::string& path);
KeywordStore load_keyword_store(const std::string& path);

}  // namespace rarecause

#endif  // RARECAUSE_KEYWORDS_HPP
