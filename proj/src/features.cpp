#include "rarecause/features.hpp"

#include <vector>

namespace rarecause {

namespace {

// Chunks whose head path reaches `target`, including `target` itself.
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

// Global morpheme position of the clue span start, for "before the clue"
// tests across chunk boundaries.
int global_offset(const Sentence& s, int chunk_index, int morpheme_index) {
  int off = 0;
  for (int i = 0; i < chunk_index; ++i)
    off += static_cast<int>(s.chunks[i].morphemes.size());
  return off + morpheme_index;
}

}  // namespace

FeatureVector extract_features(const Sentence& sentence,
                               const ClueMatch& match,
                               const Ontology& ontology) {
  FeatureVector fv;
  const int core = locate_core_phrase(sentence, match);
  const auto base = locate_base_point(sentence, core);
  const int n = static_cast<int>(sentence.chunks.size());
  const int clue_start = global_offset(sentence, core, match.begin);

  const auto core_mask = subtree_mask(sentence, core);
  std::vector<bool> base_mask(n, false);
  if (base) {
    base_mask = subtree_mask(sentence, *base);
    for (int i = 0; i < n; ++i)
      if (core_mask[i]) base_mask[i] = false;
  }

  // pp: cross product of particle tokens, core side x base-point side.
  std::vector<std::string> core_particles, base_particles;
  for (int i = 0; i < n; ++i) {
    if (!core_mask[i] && !base_mask[i]) continue;
    for (const auto& m : sentence.chunks[i].morphemes) {
      if (m.pos != Pos::Particle) continue;
      (core_mask[i] ? core_particles : base_particles).push_back(m.base);
    }
  }
  for (const auto& p1 : core_particles)
    for (const auto& p2 : base_particles) fv.bump("pp:" + p1 + "|" + p2);

  // sem: concept tuples over content words that modify the core phrase
  // (direct dependents plus in-chunk morphemes before the clue) and the
  // base-point phrase (direct dependents other than the core chunk).
  auto modifier_lemmas = [&](int target) {
    std::vector<std::string> lemmas;
    for (int i = 0; i < n; ++i) {
      if (sentence.chunks[i].head != target || i == core) continue;
      for (const auto& m : sentence.chunks[i].morphemes)
        if (is_content(m.pos)) lemmas.push_back(m.base);
    }
    int pos = global_offset(sentence, target, 0);
    for (const auto& m : sentence.chunks[target].morphemes) {
      if (pos >= clue_start) break;
      if (is_content(m.pos)) lemmas.push_back(m.base);
      ++pos;
    }
    return lemmas;
  };
  if (base) {
    for (const auto& lc : modifier_lemmas(core)) {
      auto it_c = ontology.find(lc);
      if (it_c == ontology.end()) continue;
      for (const auto& lb : modifier_lemmas(*base)) {
        auto it_b = ontology.find(lb);
        if (it_b == ontology.end()) continue;
        for (const auto& cc : it_c->second)
          for (const auto& cb : it_b->second) fv.bump("sem:" + cc + "|" + cb);
      }
    }
  }

  // posb: tag of the morpheme immediately before the clue span.
  if (clue_start == 0) {
    fv.bump("posb:BOS");
  } else {
    int pos = 0;
    Pos prev = Pos::Other;
    for (const auto& c : sentence.chunks) {
      for (const auto& m : c.morphemes) {
        if (pos == clue_start - 1) prev = m.pos;
        ++pos;
      }
    }
    fv.bump(std::string("posb:") + pos_name(prev));
  }

  fv.bump("clue:" + match.clue_surface);

  // uni/bi: lemma unigrams and adjacent bigrams over the whole sentence.
  std::vector<std::string> lemmas;
  for (const auto& c : sentence.chunks)
    for (const auto& m : c.morphemes) lemmas.push_back(m.base);
  for (const auto& l : lemmas) fv.bump("uni:" + l);
  for (size_t i = 0; i + 1 < lemmas.size(); ++i)
    fv.bump("bi:" + lemmas[i] + "|" + lemmas[i + 1]);

  return fv;
}

}  // namespace rarecause
