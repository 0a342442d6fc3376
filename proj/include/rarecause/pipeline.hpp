// Shared configuration and the end-to-end wiring behind the CLI
// subcommands.
#ifndef RARECAUSE_PIPELINE_HPP
#define RARECAUSE_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rarecause/classifier.hpp"
#include "rarecause/cooccur.hpp"
#include "rarecause/corpus.hpp"
#include "rarecause/evaluation.hpp"
#include "rarecause/keywords.hpp"
#include "rarecause/patterns.hpp"
#include "rarecause/ranker.hpp"

namespace rarecause {

struct PipelineConfig {
  struct Paths {
    std::string corpus;
    std::string clues;
    std::string ontology;
    std::string rules;
    std::string model;
    std::string index;
    std::string keywords;
    std::string labels;
    std::string judgments;
  } paths;

  double lambda = 1e-4;
  int epochs = 10;
  std::uint64_t seed = 42;
  int max_n = 3;
  int table_size = 100;  // K
  int cutoff = 20;       // N
  IdfMode idf_mode = IdfMode::Companies;
  ApMode ap_mode = ApMode::Paper;
  bool pattern_c_swap = false;
  std::string keyword;  // default query for rank/demo
};

// JSON config; relative paths resolve against the config file's directory.
PipelineConfig load_config(const std::string& path);

// Training labels file: JSONL rows {"doc_id", "sentence", "clue_chunk",
// "clue_surface", "label"} pointing into the corpus.
std::vector<LabeledExample> load_labeled_examples(
    const std::vector<AnnotatedDocument>& docs, const Ontology& ontology,
    const std::string& labels_path);

// Rules from the configured path, or the built-in defaults.
std::vector<PatternRule> rules_for(const PipelineConfig& config);

// Corpus validation plus a short text summary.
std::string corpus_summary(const std::vector<AnnotatedDocument>& docs);

// Runs the bundled end-to-end pipeline: train, extract, stats, keywords,
// both rankings, and (when judgments are configured) the evaluation report.
// Artifacts land in out_dir; returns a human-readable summary.
std::string run_demo(const PipelineConfig& config, const std::string& out_dir);

}  // namespace rarecause

#endif  // RARECAUSE_PIPELINE_HPP
