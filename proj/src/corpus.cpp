#include "rarecause/corpus.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rarecause {

using nlohmann::json;

namespace {

const char* kPosNames[] = {"noun",      "particle", "verb", "adjective",
                           "auxiliary", "symbol",   "other"};

[[noreturn]] void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

}  // namespace

const char* pos_name(Pos pos) { return kPosNames[static_cast<int>(pos)]; }

std::optional<Pos> pos_from_name(const std::string& name) {
  for (int i = 0; i < 7; ++i) {
    if (name == kPosNames[i]) return static_cast<Pos>(i);
  }
  return std::nullopt;
}

std::string Chunk::surface() const {
  std::string out;
  for (const auto& m : morphemes) out += m.surface;
  return out;
}

bool Chunk::punctuation_only() const {
  for (const auto& m : morphemes) {
    if (m.pos != Pos::Symbol) return false;
  }
  return !morphemes.empty();
}

std::string Sentence::surface() const {
  std::string out;
  for (const auto& c : chunks) out += c.surface();
  return out;
}

const ClueEntry* ClueLexicon::find(const std::string& surface) const {
  for (const auto& e : entries) {
    if (e.surface == surface) return &e;
  }
  return nullptr;
}

namespace {

Morpheme morpheme_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where + ": morpheme is not an object");
  Morpheme m;
  m.surface = j.value("surface", std::string());
  if (m.surface.empty()) fail(where + ": morpheme surface is empty");
  const std::string pos = j.value("pos", std::string());
  auto tag = pos_from_name(pos);
  if (!tag) fail(where + ": unknown pos tag '" + pos + "'");
  m.pos = *tag;
  m.base = j.value("base", m.surface);
  return m;
}

// Structural checks over one sentence's head links.
void validate_sentence(const Sentence& s, const std::string& where,
                       const std::string& doc_id) {
  const int n = static_cast<int>(s.chunks.size());
  if (n == 0) fail(where + ": sentence has no chunks");
  bool has_root = false;
  for (int i = 0; i < n; ++i) {
    const Chunk& c = s.chunks[i];
    if (c.morphemes.empty())
      fail(where + ": chunk " + std::to_string(i) + " has no morphemes");
    if (c.head == i)
      fail(where + ": chunk " + std::to_string(i) + " is its own head");
    if (c.head == kRootHead) {
      has_root = true;
    } else if (c.head < 0 || c.head >= n) {
      fail(where + ": chunk " + std::to_string(i) + " head " +
           std::to_string(c.head) + " out of range");
    }
  }
  if (!has_root) fail(where + ": sentence has no root chunk");
  // Follow head links from every chunk; more than n steps means a cycle.
  for (int i = 0; i < n; ++i) {
    int cur = i;
    int steps = 0;
    while (cur != kRootHead) {
      cur = s.chunks[cur].head;
      if (++steps > n)
        fail(where + ": head-index cycle in document '" + doc_id + "'");
    }
  }
}

AnnotatedDocument doc_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where + ": document is not an object");
  AnnotatedDocument doc;
  doc.doc_id = j.value("doc_id", std::string());
  if (doc.doc_id.empty()) fail(where + ": missing doc_id");
  doc.company_id = j.value("company_id", std::string());
  if (doc.company_id.empty())
    fail(where + ": missing company_id in document '" + doc.doc_id + "'");
  if (!j.contains("sentences") || !j["sentences"].is_array())
    fail(where + ": document '" + doc.doc_id + "' has no sentences array");
  int sent_index = 0;
  for (const auto& js : j["sentences"]) {
    Sentence s;
    s.index = sent_index++;
    if (!js.contains("chunks") || !js["chunks"].is_array())
      fail(where + ": sentence " + std::to_string(s.index) +
           " has no chunks array");
    for (const auto& jc : js["chunks"]) {
      Chunk c;
      if (!jc.contains("head") || !jc["head"].is_number_integer())
        fail(where + ": chunk without integer head");
      c.head = jc["head"].get<int>();
      const json morphemes = jc.value("morphemes", json::array());
      for (const auto& jm : morphemes)
        c.morphemes.push_back(morpheme_from_json(jm, where));
      s.chunks.push_back(std::move(c));
    }
    validate_sentence(s, where, doc.doc_id);
    doc.sentences.push_back(std::move(s));
  }
  return doc;
}

json doc_to_json(const AnnotatedDocument& doc) {
  json sentences = json::array();
  for (const auto& s : doc.sentences) {
    json chunks = json::array();
    for (const auto& c : s.chunks) {
      json morphemes = json::array();
      for (const auto& m : c.morphemes) {
        morphemes.push_back({{"surface", m.surface},
                             {"pos", pos_name(m.pos)},
                             {"base", m.base}});
      }
      chunks.push_back({{"head", c.head}, {"morphemes", morphemes}});
    }
    sentences.push_back({{"chunks", chunks}});
  }
  return json{{"doc_id", doc.doc_id},
              {"company_id", doc.company_id},
              {"sentences", sentences}};
}

}  // namespace

std::vector<AnnotatedDocument> parse_corpus_text(const std::string& text) {
  std::vector<AnnotatedDocument> docs;
  std::set<std::string> seen_ids;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(lineno);
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      fail(where + ": malformed JSON: " + e.what());
    }
    AnnotatedDocument doc = doc_from_json(j, where);
    if (!seen_ids.insert(doc.doc_id).second)
      fail(where + ": duplicate doc_id '" + doc.doc_id + "'");
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<AnnotatedDocument> parse_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open corpus file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus_text(buf.str());
}

std::string corpus_to_jsonl(const std::vector<AnnotatedDocument>& docs) {
  std::string out;
  for (const auto& doc : docs) {
    out += doc_to_json(doc).dump();
    out += '\n';
  }
  return out;
}

void write_corpus(const std::vector<AnnotatedDocument>& docs,
                  const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write corpus file: " + path);
  out << corpus_to_jsonl(docs);
}

ClueLexicon load_clue_lexicon(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open clue lexicon: " + path);
  ClueLexicon lex;
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    ClueEntry entry;
    const auto tab = line.find('\t');
    entry.surface = line.substr(0, tab);
    if (entry.surface.empty())
      fail("clue lexicon line " + std::to_string(lineno) + ": empty surface");
    if (!seen.insert(entry.surface).second)
      fail("clue lexicon line " + std::to_string(lineno) +
           ": duplicate surface '" + entry.surface + "'");
    if (tab != std::string::npos) {
      std::istringstream flags(line.substr(tab + 1));
      std::string flag;
      while (std::getline(flags, flag, ',')) {
        if (flag == "final") {
          entry.sentence_final_only = true;
        } else if (flag == "xsent") {
          entry.cross_sentence = true;
        } else if (!flag.empty()) {
          fail("clue lexicon line " + std::to_string(lineno) +
               ": unknown flag '" + flag + "'");
        }
      }
    }
    lex.entries.push_back(std::move(entry));
  }
  return lex;
}

Ontology load_ontology(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open ontology: " + path);
  Ontology onto;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      fail("ontology line " + std::to_string(lineno) + ": missing tab");
    const std::string lemma = line.substr(0, tab);
    std::vector<std::string> chain;
    std::istringstream concepts(line.substr(tab + 1));
    std::string label;
    while (std::getline(concepts, label, '>')) {
      if (!label.empty()) chain.push_back(label);
    }
    if (lemma.empty() || chain.empty())
      fail("ontology line " + std::to_string(lineno) + ": empty entry");
    onto[lemma] = std::move(chain);
  }
  return onto;
}

std::vector<ClueMatch> find_clues(const Sentence& sentence,
                                  const ClueLexicon& lexicon) {
  std::vector<ClueMatch> matches;
  const int n_chunks = static_cast<int>(sentence.chunks.size());
  for (int ci = 0; ci < n_chunks; ++ci) {
    const Chunk& chunk = sentence.chunks[ci];
    const bool last_chunk = ci == n_chunks - 1;
    const int n = static_cast<int>(chunk.morphemes.size());
    int start = 0;
    while (start < n) {
      // Longest lexicon surface starting at this morpheme wins.
      int best_end = -1;
      const ClueEntry* best = nullptr;
      std::string run;
      for (int end = start; end < n; ++end) {
        run += chunk.morphemes[end].surface;
        for (const auto& entry : lexicon.entries) {
          if (entry.sentence_final_only && !last_chunk) continue;
          if (entry.surface == run) {
            best_end = end + 1;
            best = &entry;
          }
        }
      }
      if (best) {
        matches.push_back(ClueMatch{sentence.index, ci, start, best_end,
                                    best->surface});
        start = best_end;
      } else {
        ++start;
      }
    }
  }
  return matches;
}

int locate_core_phrase(const Sentence&, const ClueMatch& match) {
  return match.chunk_index;
}

std::optional<int> locate_base_point(const Sentence& sentence, int core) {
  const int head = sentence.chunks.at(core).head;
  if (head == kRootHead) return std::nullopt;
  return head;
}

}  // namespace rarecause
