#include "rarecause/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rarecause {

namespace fs = std::filesystem;
using nlohmann::json;

PipelineConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed config file " + path + ": " + e.what());
  }
  PipelineConfig config;
  const fs::path base = fs::path(path).parent_path();
  auto resolve = [&base](const std::string& p) {
    if (p.empty()) return p;
    fs::path fp(p);
    return fp.is_absolute() ? fp.string() : (base / fp).string();
  };
  const json paths = j.value("paths", json::object());
  config.paths.corpus = resolve(paths.value("corpus", std::string()));
  config.paths.clues = resolve(paths.value("clues", std::string()));
  config.paths.ontology = resolve(paths.value("ontology", std::string()));
  config.paths.rules = resolve(paths.value("rules", std::string()));
  config.paths.model = resolve(paths.value("model", std::string()));
  config.paths.index = resolve(paths.value("index", std::string()));
  config.paths.keywords = resolve(paths.value("keywords", std::string()));
  config.paths.labels = resolve(paths.value("labels", std::string()));
  config.paths.judgments = resolve(paths.value("judgments", std::string()));

  const json params = j.value("params", json::object());
  config.lambda = params.value("lambda", config.lambda);
  config.epochs = params.value("epochs", config.epochs);
  config.seed = params.value("seed", config.seed);
  config.max_n = params.value("max_n", config.max_n);
  config.table_size = params.value("k", config.table_size);
  config.cutoff = params.value("n", config.cutoff);
  config.pattern_c_swap = params.value("pattern_c_swap", config.pattern_c_swap);
  config.keyword = params.value("keyword", config.keyword);
  const std::string idf = params.value("idf_mode", std::string("companies"));
  if (idf == "companies") {
    config.idf_mode = IdfMode::Companies;
  } else if (idf == "files") {
    config.idf_mode = IdfMode::Files;
  } else {
    throw std::runtime_error("config: unknown idf_mode '" + idf + "'");
  }
  const std::string ap = params.value("ap_mode", std::string("paper"));
  if (ap == "paper") {
    config.ap_mode = ApMode::Paper;
  } else if (ap == "standard") {
    config.ap_mode = ApMode::Standard;
  } else {
    throw std::runtime_error("config: unknown ap_mode '" + ap + "'");
  }
  if (config.cutoff < 1 || config.max_n < 1)
    throw std::runtime_error("config: n and max_n must be >= 1");
  return config;
}

std::vector<LabeledExample> load_labeled_examples(
    const std::vector<AnnotatedDocument>& docs, const Ontology& ontology,
    const std::string& labels_path) {
  std::map<std::string, const AnnotatedDocument*> by_id;
  for (const auto& doc : docs) by_id[doc.doc_id] = &doc;

  std::ifstream in(labels_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open labels file: " + labels_path);
  std::vector<LabeledExample> examples;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string where =
        "labels file line " + std::to_string(lineno) + ": ";
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw std::runtime_error(where + e.what());
    }
    const std::string doc_id = j.value("doc_id", std::string());
    auto it = by_id.find(doc_id);
    if (it == by_id.end())
      throw std::runtime_error(where + "unknown doc_id '" + doc_id + "'");
    const AnnotatedDocument& doc = *it->second;
    const int sentence_index = j.value("sentence", -1);
    if (sentence_index < 0 ||
        sentence_index >= static_cast<int>(doc.sentences.size()))
      throw std::runtime_error(where + "sentence index out of range");
    const Sentence& sentence = doc.sentences[sentence_index];
    const int chunk_index = j.value("clue_chunk", -1);
    if (chunk_index < 0 ||
        chunk_index >= static_cast<int>(sentence.chunks.size()))
      throw std::runtime_error(where + "clue_chunk out of range");
    const std::string clue = j.value("clue_surface", std::string());

    // Locate the clue span inside the chunk.
    const Chunk& chunk = sentence.chunks[chunk_index];
    ClueMatch match{sentence.index, chunk_index, -1, -1, clue};
    const int n = static_cast<int>(chunk.morphemes.size());
    for (int start = 0; start < n && match.begin < 0; ++start) {
      std::string run;
      for (int end = start; end < n; ++end) {
        run += chunk.morphemes[end].surface;
        if (run == clue) {
          match.begin = start;
          match.end = end + 1;
          break;
        }
        if (run.size() >= clue.size()) break;
      }
    }
    if (match.begin < 0)
      throw std::runtime_error(where + "clue '" + clue +
                               "' not found in chunk");
    LabeledExample example;
    example.features = extract_features(sentence, match, ontology);
    example.causal = j.value("label", 0) != 0;
    examples.push_back(std::move(example));
  }
  return examples;
}

std::vector<PatternRule> rules_for(const PipelineConfig& config) {
  if (!config.paths.rules.empty()) return load_rules(config.paths.rules);
  return default_rules(config.pattern_c_swap);
}

std::string corpus_summary(const std::vector<AnnotatedDocument>& docs) {
  size_t sentences = 0, chunks = 0, morphemes = 0;
  std::set<std::string> companies;
  for (const auto& doc : docs) {
    companies.insert(doc.company_id);
    sentences += doc.sentences.size();
    for (const auto& s : doc.sentences) {
      chunks += s.chunks.size();
      for (const auto& c : s.chunks) morphemes += c.morphemes.size();
    }
  }
  std::ostringstream out;
  out << "documents: " << docs.size() << "\ncompanies: " << companies.size()
      << "\nsentences: " << sentences << "\nchunks: " << chunks
      << "\nmorphemes: " << morphemes << '\n';
  return out.str();
}

std::string run_demo(const PipelineConfig& config, const std::string& out_dir) {
  if (config.paths.corpus.empty() || config.paths.clues.empty() ||
      config.paths.ontology.empty() || config.paths.labels.empty())
    throw std::runtime_error(
        "demo requires corpus, clues, ontology and labels paths in the config");
  if (config.keyword.empty())
    throw std::runtime_error("demo requires a query keyword in the config");
  fs::create_directories(out_dir);
  const fs::path out(out_dir);

  std::ostringstream log;
  const auto docs = parse_corpus(config.paths.corpus);
  log << "corpus: " << docs.size() << " documents\n";

  const auto lexicon = load_clue_lexicon(config.paths.clues);
  const auto ontology = load_ontology(config.paths.ontology);
  const auto rules = rules_for(config);

  const auto examples = load_labeled_examples(docs, ontology, config.paths.labels);
  TrainOptions opts;
  opts.lambda = config.lambda;
  opts.epochs = config.epochs;
  opts.seed = config.seed;
  const LinearModel model = train(examples, opts);
  save_model(model, (out / "model.json").string());
  log << "model: trained on " << examples.size() << " labeled sentences\n";

  const auto records = extract_all(docs, lexicon, ontology, &model, rules);
  write_records(records, (out / "records.jsonl").string());
  log << "records: " << records.size() << " cause-effect expressions\n";

  const auto index = build_index(records, docs, config.max_n);
  save_index(index, (out / "index.json").string());

  const auto sets = build_company_doc_sets(docs, config.idf_mode);
  KeywordStore store;
  for (const auto& [company, set] : sets)
    store[company] = build_keyword_table(set, config.table_size);
  save_keyword_store(store, config.table_size, (out / "keywords.json").string());
  log << "keywords: tables for " << store.size() << " companies\n";

  const auto candidates = make_candidates(records, docs, config.max_n);
  const auto method =
      rank_rare(config.keyword, candidates, index, store, config.cutoff);
  const auto baseline =
      rank_baseline(config.keyword, candidates, index, store, config.cutoff);
  write_ranking(method, config.keyword, (out / "ranking_method.jsonl").string());
  write_ranking(baseline, config.keyword,
                (out / "ranking_baseline.jsonl").string());

  log << "query keyword: " << config.keyword << '\n';
  auto preview = [&log](const char* name, const std::vector<RankedResult>& r) {
    log << name << ":\n";
    for (const auto& row : r) {
      if (row.rank > 3) break;
      log << "  " << row.rank << ". [" << row.record.company_id << "] "
          << row.record.cause << " => " << row.record.effect << '\n';
    }
  };
  preview("method ranking", method);
  preview("baseline ranking", baseline);

  if (!config.paths.judgments.empty()) {
    const auto judgments = load_judgments(config.paths.judgments);
    const std::vector<RankingSummary> summary{
        {config.keyword, static_cast<int>(method.size())}};
    const EvalReport report = render_report(summary, judgments, config.ap_mode);
    std::ofstream report_out(out / "report.json", std::ios::binary);
    report_out << report_to_json(report) << '\n';
    log << "evaluation: precision " << report.mean_precision << ", MAP "
        << report.map << '\n';
  }
  log << "artifacts written to " << out_dir << '\n';
  return log.str();
}

}  // namespace rarecause
