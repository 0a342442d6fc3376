#include "rarecause/keywords.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace rarecause {

using nlohmann::json;

std::map<std::string, CompanyDocSet> build_company_doc_sets(
    const std::vector<AnnotatedDocument>& docs, IdfMode mode) {
  std::map<std::string, CompanyDocSet> sets;
  std::map<std::string, long> df;
  std::set<std::string> companies;
  for (const auto& doc : docs) {
    companies.insert(doc.company_id);
    CompanyDocSet& set = sets[doc.company_id];
    set.company_id = doc.company_id;
    set.docs.push_back(doc.doc_id);
    std::set<std::string> seen_in_doc;
    for (const auto& sentence : doc.sentences) {
      for (const auto& chunk : sentence.chunks) {
        for (const auto& m : chunk.morphemes) {
          if (m.pos != Pos::Noun) continue;
          set.word_doc_counts[m.base][doc.doc_id] += 1;
          seen_in_doc.insert(m.base);
        }
      }
    }
    for (const auto& w : seen_in_doc) df[w] += 1;
  }
  const long n = mode == IdfMode::Companies
                     ? static_cast<long>(companies.size())
                     : static_cast<long>(docs.size());
  for (auto& [company, set] : sets) {
    set.df = df;
    set.idf_total = std::max<long>(n, 1);
  }
  return sets;
}

double word_entropy(const CompanyDocSet& set, const std::string& word) {
  auto it = set.word_doc_counts.find(word);
  if (it == set.word_doc_counts.end() || it->second.empty())
    throw std::invalid_argument("word_entropy: '" + word +
                                "' does not occur in company '" +
                                set.company_id + "'");
  double total = 0.0;
  for (const auto& [doc, count] : it->second) total += count;
  double h = 0.0;
  for (const auto& [doc, count] : it->second) {
    const double p = count / total;
    h -= p * std::log2(p);
  }
  return h;
}

double word_weight(const CompanyDocSet& set, const std::string& word) {
  auto df_it = set.df.find(word);
  if (df_it == set.df.end() || df_it->second == 0)
    throw std::invalid_argument("word_weight: df('" + word + "') is zero");
  const double idf =
      std::log2(static_cast<double>(set.idf_total) / df_it->second);
  if (idf <= 0.0) return 0.0;
  auto counts = set.word_doc_counts.find(word);
  if (counts == set.word_doc_counts.end())
    throw std::invalid_argument("word_weight: '" + word +
                                "' does not occur in company '" +
                                set.company_id + "'");
  double tf = 0.0;
  for (const auto& [doc, count] : counts->second) tf += count;
  return tf * word_entropy(set, word) * idf;
}

CompanyKeywordTable build_keyword_table(const CompanyDocSet& set, int k) {
  CompanyKeywordTable table;
  table.company_id = set.company_id;
  table.cap = k;
  std::vector<std::pair<std::string, double>> weighted;
  double max_w = 0.0;
  for (const auto& [word, counts] : set.word_doc_counts) {
    const double w = word_weight(set, word);
    if (w > 0.0) {
      weighted.emplace_back(word, w);
      max_w = std::max(max_w, w);
    }
  }
  if (weighted.empty() || max_w == 0.0) return table;
  std::sort(weighted.begin(), weighted.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (static_cast<int>(weighted.size()) > k) weighted.resize(k);
  for (const auto& [word, w] : weighted) table.entries[word] = w / max_w;
  return table;
}

double keyword_score(const CompanyKeywordTable& table, const std::string& word) {
  auto it = table.entries.find(word);
  return it == table.entries.end() ? 0.0 : it->second;
}

void save_keyword_store(const KeywordStore& store, int k,
                        const std::string& path) {
  json companies = json::object();
  for (const auto& [company, table] : store) {
    json entries = json::object();
    for (const auto& [word, score] : table.entries) entries[word] = score;
    companies[company] = entries;
  }
  const json j{{"K", k}, {"companies", companies}};
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write keywords file: " + path);
  out << j.dump() << '\n';
}

KeywordStore load_keyword_store(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open keywords file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed keywords file " + path + ": " +
                             e.what());
  }
  KeywordStore store;
  const int k = j.value("K", 100);
  const json companies = j.value("companies", json::object());
  for (const auto& [company, entries] : companies.items()) {
    CompanyKeywordTable table;
    table.company_id = company;
    table.cap = k;
    for (const auto& [word, score] : entries.items())
      table.entries[word] = score.get<double>();
    store[company] = std::move(table);
  }
  return store;
}

}  // namespace rarecause
