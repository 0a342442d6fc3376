#include "rarecause/patterns.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rarecause {

using nlohmann::json;

namespace {

const char* kPositionNames[] = {"medial", "sentence_final", "sentence_initial"};
const char* kSideNames[] = {"core", "base_point", "previous_sentence"};

std::vector<bool> subtree_mask(const Sentence& s, int target) {
  const int n = static_cast<int>(s.chunks.size());
  std::vector<bool> mask(n, false);
  for (int i = 0; i < n; ++i) {
    int cur = i;
    while (cur != kRootHead && cur != target) cur = s.chunks[cur].head;
    mask[i] = cur == target;
  }
  return mask;
}

// A topic-marked chunk ends (ignoring punctuation) with the particle は.
bool topic_marked(const Chunk& chunk) {
  for (auto it = chunk.morphemes.rbegin(); it != chunk.morphemes.rend(); ++it) {
    if (it->pos == Pos::Symbol) continue;
    return it->pos == Pos::Particle && it->surface == "は";
  }
  return false;
}

// Concatenated surfaces of the contiguous run of `member` chunks that
// contains `anchor`, with trailing punctuation-only chunks attached.
std::string assemble_run(const Sentence& s, const std::vector<bool>& member,
                         int anchor) {
  const int n = static_cast<int>(s.chunks.size());
  if (anchor < 0 || anchor >= n || !member[anchor]) return {};
  int lo = anchor, hi = anchor;
  while (lo > 0 && member[lo - 1]) --lo;
  while (hi + 1 < n && member[hi + 1]) ++hi;
  while (hi + 1 < n && s.chunks[hi + 1].punctuation_only()) ++hi;
  std::string out;
  for (int i = lo; i <= hi; ++i) out += s.chunks[i].surface();
  return out;
}

std::string pre_clue_text(const Sentence& s, const ClueMatch& match) {
  std::string out;
  const Chunk& chunk = s.chunks[match.chunk_index];
  for (int i = 0; i < match.begin; ++i) out += chunk.morphemes[i].surface;
  return out;
}

// The contiguous `member` run ending right before the core chunk, plus the
// core chunk's own morphemes up to the clue.
std::string left_run_plus_pre_clue(const Sentence& s, const ClueMatch& match,
                                   const std::vector<bool>& member, int core) {
  std::string out;
  if (core > 0 && member[core - 1]) {
    int lo = core - 1;
    while (lo > 0 && member[lo - 1]) --lo;
    for (int i = lo; i < core; ++i) out += s.chunks[i].surface();
  }
  return out + pre_clue_text(s, match);
}

// Text of one rule side. Medial and sentence-initial clues split at the
// core/base-point boundary; sentence-final clues split the core chunk's
// dependents at the topic-marked one, which stands in for the base point.
std::string side_text(const AnnotatedDocument& doc, const ClueMatch& match,
                      SpanSide side, CluePosition position) {
  const Sentence& s = doc.sentences[match.sentence_index];
  if (side == SpanSide::PreviousSentence) {
    if (match.sentence_index == 0) return {};
    return doc.sentences[match.sentence_index - 1].surface();
  }

  const int core = locate_core_phrase(s, match);
  const int n = static_cast<int>(s.chunks.size());
  auto core_mask = subtree_mask(s, core);

  if (position == CluePosition::SentenceFinal) {
    int topic = -1;
    for (int i = 0; i < n; ++i) {
      if (i != core && s.chunks[i].head == core && topic_marked(s.chunks[i])) {
        topic = i;
        break;
      }
    }
    if (side == SpanSide::BasePoint) {
      if (topic < 0) return {};
      return assemble_run(s, subtree_mask(s, topic), topic);
    }
    // Core side: remaining dependent subtrees plus pre-clue morphemes.
    std::vector<bool> member = core_mask;
    member[core] = false;
    if (topic >= 0) {
      auto topic_mask = subtree_mask(s, topic);
      for (int i = 0; i < n; ++i)
        if (topic_mask[i]) member[i] = false;
    }
    return left_run_plus_pre_clue(s, match, member, core);
  }

  if (side == SpanSide::Core) {
    std::vector<bool> member = core_mask;
    member[core] = false;
    return left_run_plus_pre_clue(s, match, member, core);
  }

  const auto base = locate_base_point(s, core);
  if (!base) return {};
  std::vector<bool> member = subtree_mask(s, *base);
  for (int i = 0; i < n; ++i)
    if (core_mask[i]) member[i] = false;
  return assemble_run(s, member, *base);
}

PatternRule rule_from_json(const json& j) {
  PatternRule rule;
  rule.id = j.value("id", std::string());
  if (rule.id.empty()) throw std::runtime_error("pattern rule without id");
  const std::string pos = j.value("clue_position", std::string("medial"));
  const std::string cause = j.value("cause_side", std::string("core"));
  const std::string effect = j.value("effect_side", std::string("base_point"));
  auto parse_position = [](const std::string& name) {
    for (int i = 0; i < 3; ++i)
      if (name == kPositionNames[i]) return static_cast<CluePosition>(i);
    throw std::runtime_error("unknown clue_position '" + name + "'");
  };
  auto parse_side = [](const std::string& name) {
    for (int i = 0; i < 3; ++i)
      if (name == kSideNames[i]) return static_cast<SpanSide>(i);
    throw std::runtime_error("unknown span side '" + name + "'");
  };
  rule.clue_position = parse_position(pos);
  rule.cause_side = parse_side(cause);
  rule.effect_side = parse_side(effect);
  rule.cross_sentence = j.value("cross_sentence", false);
  const json surfaces = j.value("clue_surfaces", json::array());
  for (const auto& surf : surfaces)
    rule.clue_surfaces.push_back(surf.get<std::string>());
  if (rule.cause_side == rule.effect_side)
    throw std::runtime_error("pattern rule " + rule.id +
                             ": cause and effect sides must differ");
  const bool spans_prev = rule.cause_side == SpanSide::PreviousSentence ||
                          rule.effect_side == SpanSide::PreviousSentence;
  if (spans_prev != rule.cross_sentence)
    throw std::runtime_error("pattern rule " + rule.id +
                             ": cross_sentence flag inconsistent with sides");
  return rule;
}

json rule_to_json(const PatternRule& rule) {
  return json{{"id", rule.id},
              {"clue_position", kPositionNames[static_cast<int>(rule.clue_position)]},
              {"cause_side", kSideNames[static_cast<int>(rule.cause_side)]},
              {"effect_side", kSideNames[static_cast<int>(rule.effect_side)]},
              {"cross_sentence", rule.cross_sentence},
              {"clue_surfaces", rule.clue_surfaces}};
}

}  // namespace

const char* clue_position_name(CluePosition p) {
  return kPositionNames[static_cast<int>(p)];
}

const char* span_side_name(SpanSide s) { return kSideNames[static_cast<int>(s)]; }

CluePosition clue_position_of(const Sentence& sentence, const ClueMatch& match) {
  const int last = static_cast<int>(sentence.chunks.size()) - 1;
  const int chunk_len =
      static_cast<int>(sentence.chunks[match.chunk_index].morphemes.size());
  const bool at_start = match.chunk_index == 0 && match.begin == 0;
  if (match.chunk_index == last && match.end == chunk_len && !at_start)
    return CluePosition::SentenceFinal;
  if (at_start) return CluePosition::SentenceInitial;
  return CluePosition::Medial;
}

std::vector<PatternRule> default_rules(bool pattern_c_swap) {
  std::vector<PatternRule> rules;
  rules.push_back({"A", CluePosition::Medial, SpanSide::Core,
                   SpanSide::BasePoint, false, {}});
  // B mirrors A for medial clues with a fronted effect; shadowed by A until
  // given clue_surfaces or reordered in a rules file.
  rules.push_back({"B", CluePosition::Medial, SpanSide::Core,
                   SpanSide::BasePoint, false, {}});
  if (pattern_c_swap) {
    rules.push_back({"C", CluePosition::SentenceFinal, SpanSide::BasePoint,
                     SpanSide::Core, false, {}});
  } else {
    rules.push_back({"C", CluePosition::SentenceFinal, SpanSide::Core,
                     SpanSide::BasePoint, false, {}});
  }
  rules.push_back({"D", CluePosition::SentenceInitial, SpanSide::BasePoint,
                   SpanSide::PreviousSentence, true,
                   {"なぜなら", "というのも"}});
  rules.push_back({"E", CluePosition::SentenceInitial,
                   SpanSide::PreviousSentence, SpanSide::BasePoint, true,
                   {"このため", "そのため", "この結果", "その結果"}});
  return rules;
}

std::vector<PatternRule> load_rules(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open rules file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed rules file " + path + ": " + e.what());
  }
  if (!j.is_array())
    throw std::runtime_error("rules file " + path + ": expected a JSON array");
  std::vector<PatternRule> rules;
  for (const auto& item : j) rules.push_back(rule_from_json(item));
  return rules;
}

void save_rules(const std::vector<PatternRule>& rules, const std::string& path) {
  json j = json::array();
  for (const auto& rule : rules) j.push_back(rule_to_json(rule));
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write rules file: " + path);
  out << j.dump(2) << '\n';
}

std::optional<PatternRule> select_pattern(const Sentence& sentence,
                                          const ClueMatch& match,
                                          const std::vector<PatternRule>& rules) {
  const CluePosition position = clue_position_of(sentence, match);
  for (const auto& rule : rules) {
    if (rule.clue_position != position) continue;
    if (!rule.clue_surfaces.empty() &&
        std::find(rule.clue_surfaces.begin(), rule.clue_surfaces.end(),
                  match.clue_surface) == rule.clue_surfaces.end())
      continue;
    if (rule.cross_sentence && sentence.index == 0) continue;
    return rule;
  }
  return std::nullopt;
}

std::optional<std::pair<std::string, std::string>> extract_spans(
    const AnnotatedDocument& doc, const ClueMatch& match,
    const PatternRule& rule) {
  const Sentence& sentence = doc.sentences[match.sentence_index];
  const CluePosition position = clue_position_of(sentence, match);
  const std::string cause = side_text(doc, match, rule.cause_side, position);
  const std::string effect = side_text(doc, match, rule.effect_side, position);
  if (cause.empty() || effect.empty()) return std::nullopt;
  return std::make_pair(cause, effect);
}

std::vector<CausalRecord> extract_all(const std::vector<AnnotatedDocument>& docs,
                                      const ClueLexicon& lexicon,
                                      const Ontology& ontology,
                                      const LinearModel* model,
                                      const std::vector<PatternRule>& rules) {
  std::vector<CausalRecord> records;
  for (const auto& doc : docs) {
    for (const auto& sentence : doc.sentences) {
      for (const auto& match : find_clues(sentence, lexicon)) {
        if (model != nullptr) {
          const FeatureVector fv = extract_features(sentence, match, ontology);
          if (!predict(*model, fv).causal) continue;
        }
        const auto rule = select_pattern(sentence, match, rules);
        if (!rule) continue;
        const auto spans = extract_spans(doc, match, *rule);
        if (!spans) continue;
        records.push_back(CausalRecord{spans->first, spans->second,
                                       doc.company_id, doc.doc_id,
                                       sentence.index, match.clue_surface,
                                       rule->id});
      }
    }
  }
  return records;
}

void write_records(const std::vector<CausalRecord>& records,
                   const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write records file: " + path);
  for (const auto& r : records) {
    out << json{{"cause", r.cause},         {"effect", r.effect},
                {"company_id", r.company_id}, {"doc_id", r.doc_id},
                {"sentence", r.sentence_index}, {"clue", r.clue_surface},
                {"pattern", r.pattern_id}}
               .dump()
        << '\n';
  }
}

std::vector<CausalRecord> load_records(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open records file: " + path);
  std::vector<CausalRecord> records;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw std::runtime_error("records file " + path + " line " +
                               std::to_string(lineno) + ": " + e.what());
    }
    CausalRecord r;
    r.cause = j.value("cause", std::string());
    r.effect = j.value("effect", std::string());
    r.company_id = j.value("company_id", std::string());
    r.doc_id = j.value("doc_id", std::string());
    r.sentence_index = j.value("sentence", 0);
    r.clue_surface = j.value("clue", std::string());
    r.pattern_id = j.value("pattern", std::string());
    if (r.cause.empty() || r.effect.empty())
      throw std::runtime_error("records file " + path + " line " +
                               std::to_string(lineno) +
                               ": cause and effect must be non-empty");
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace rarecause
