#include "rarecause/cooccur.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace rarecause {

using nlohmann::json;

std::set<std::string> noun_ngrams(const std::vector<Morpheme>& morphemes,
                                  int max_n) {
  if (max_n < 1) throw std::invalid_argument("noun_ngrams: max_n must be >= 1");
  std::set<std::string> grams;
  const size_t n = morphemes.size();
  size_t i = 0;
  while (i < n) {
    if (morphemes[i].pos != Pos::Noun) {
      ++i;
      continue;
    }
    size_t run_end = i;
    while (run_end < n && morphemes[run_end].pos == Pos::Noun) ++run_end;
    for (size_t start = i; start < run_end; ++start) {
      std::string key;
      for (size_t end = start;
           end < run_end && end - start < static_cast<size_t>(max_n); ++end) {
        if (end > start) key += ' ';
        key += morphemes[end].base;
        grams.insert(key);
      }
    }
    i = run_end;
  }
  return grams;
}

void CooccurrenceIndex::merge(const CooccurrenceIndex& other) {
  if (max_n != other.max_n)
    throw std::invalid_argument("merge: indices built with different max_n");
  for (const auto& [key, count] : other.cause_count) cause_count[key] += count;
  for (const auto& [key, count] : other.pair_count) pair_count[key] += count;
}

std::vector<Morpheme> recover_span_morphemes(const AnnotatedDocument& doc,
                                             int sentence_index,
                                             const std::string& text) {
  // Cross-sentence patterns may place one side in the previous sentence.
  for (int si : {sentence_index, sentence_index - 1}) {
    if (si < 0 || si >= static_cast<int>(doc.sentences.size())) continue;
    std::vector<Morpheme> flat;
    for (const auto& chunk : doc.sentences[si].chunks)
      for (const auto& m : chunk.morphemes) flat.push_back(m);
    for (size_t start = 0; start < flat.size(); ++start) {
      std::string run;
      for (size_t end = start; end < flat.size(); ++end) {
        run += flat[end].surface;
        if (run.size() > text.size()) break;
        if (run == text)
          return std::vector<Morpheme>(flat.begin() + start,
                                       flat.begin() + end + 1);
      }
    }
  }
  throw std::runtime_error("cannot locate span '" + text + "' in document '" +
                           doc.doc_id + "'");
}

CooccurrenceIndex build_index(const std::vector<CausalRecord>& records,
                              const std::vector<AnnotatedDocument>& docs,
                              int max_n) {
  std::map<std::string, const AnnotatedDocument*> by_id;
  for (const auto& doc : docs) by_id[doc.doc_id] = &doc;

  CooccurrenceIndex index;
  index.max_n = max_n;
  for (const auto& record : records) {
    auto it = by_id.find(record.doc_id);
    if (it == by_id.end())
      throw std::runtime_error("record references unknown document '" +
                               record.doc_id + "'");
    const AnnotatedDocument& doc = *it->second;
    if (record.sentence_index < 0 ||
        record.sentence_index >= static_cast<int>(doc.sentences.size()))
      throw std::runtime_error("record sentence out of range in document '" +
                               record.doc_id + "'");
    const auto cause = noun_ngrams(
        recover_span_morphemes(doc, record.sentence_index, record.cause), max_n);
    const auto effect = noun_ngrams(
        recover_span_morphemes(doc, record.sentence_index, record.effect),
        max_n);
    for (const auto& cn : cause) {
      index.cause_count[cn] += 1;
      for (const auto& en : effect) index.pair_count[{cn, en}] += 1;
    }
  }
  return index;
}

double conditional_probability(const CooccurrenceIndex& index,
                               const std::string& cause_ngram,
                               const std::string& effect_ngram) {
  auto denom = index.cause_count.find(cause_ngram);
  if (denom == index.cause_count.end() || denom->second == 0) return 0.0;
  auto num = index.pair_count.find({cause_ngram, effect_ngram});
  if (num == index.pair_count.end()) return 0.0;
  return static_cast<double>(num->second) / static_cast<double>(denom->second);
}

void save_index(const CooccurrenceIndex& index, const std::string& path) {
  json cause = json::object();
  for (const auto& [key, count] : index.cause_count) cause[key] = count;
  json pairs = json::array();
  for (const auto& [key, count] : index.pair_count)
    pairs.push_back({{"c", key.first}, {"e", key.second}, {"n", count}});
  const json j{{"max_n", index.max_n},
               {"cause_count", cause},
               {"pair_count", pairs}};
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write index file: " + path);
  out << j.dump() << '\n';
}

CooccurrenceIndex load_index(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open index file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed index file " + path + ": " + e.what());
  }
  CooccurrenceIndex index;
  index.max_n = j.value("max_n", 3);
  const json cause = j.value("cause_count", json::object());
  for (const auto& [key, count] : cause.items())
    index.cause_count[key] = count.get<long>();
  const json pairs = j.value("pair_count", json::array());
  for (const auto& item : pairs) {
    index.pair_count[{item.at("c").get<std::string>(),
                      item.at("e").get<std::string>()}] =
        item.at("n").get<long>();
  }
  return index;
}

}  // namespace rarecause
