// rarecause: extract cause-effect expressions from chunk/dependency
// annotated financial text and rank the rarest ones for a query keyword.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rarecause/pipeline.hpp"

using namespace rarecause;

namespace {

struct CommonArgs {
  std::string config_path;

  PipelineConfig config() const {
    if (config_path.empty()) return PipelineConfig{};
    return load_config(config_path);
  }
};

std::string pick(const std::string& flag_value, const std::string& config_value,
                 const char* what) {
  if (!flag_value.empty()) return flag_value;
  if (!config_value.empty()) return config_value;
  throw std::runtime_error(std::string("missing required path: ") + what);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rare cause-effect expression mining pipeline"};
  app.require_subcommand(1);
  CommonArgs common;

  // ingest -------------------------------------------------------------
  auto* ingest = app.add_subcommand("ingest", "validate a corpus file");
  std::string ingest_corpus;
  ingest->add_option("--corpus", ingest_corpus, "corpus JSONL");
  ingest->add_option("--config", common.config_path, "config JSON");

  // train --------------------------------------------------------------
  auto* train_cmd = app.add_subcommand("train", "train the sentence filter");
  std::string train_corpus, train_labels, train_model, train_ontology;
  double lambda = -1.0;
  int epochs = -1;
  std::int64_t seed = -1;
  train_cmd->add_option("--corpus", train_corpus, "corpus JSONL");
  train_cmd->add_option("--labels", train_labels, "labeled sentences JSONL");
  train_cmd->add_option("--ontology", train_ontology, "ontology TSV");
  train_cmd->add_option("--model", train_model, "output model JSON");
  train_cmd->add_option("--lambda", lambda, "regularization strength");
  train_cmd->add_option("--epochs", epochs, "training epochs");
  train_cmd->add_option("--seed", seed, "shuffle seed");
  train_cmd->add_option("--config", common.config_path, "config JSON");

  // extract ------------------------------------------------------------
  auto* extract_cmd =
      app.add_subcommand("extract", "extract cause-effect records");
  std::string ex_corpus, ex_clues, ex_ontology, ex_model, ex_rules, ex_out;
  bool no_filter = false;
  extract_cmd->add_option("--corpus", ex_corpus, "corpus JSONL");
  extract_cmd->add_option("--clues", ex_clues, "clue lexicon TSV");
  extract_cmd->add_option("--ontology", ex_ontology, "ontology TSV");
  extract_cmd->add_option("--model", ex_model, "trained model JSON");
  extract_cmd->add_option("--rules", ex_rules, "pattern rules JSON");
  extract_cmd->add_flag("--no-filter", no_filter,
                        "skip the classifier, keep every clue match");
  extract_cmd->add_option("--out", ex_out, "output records JSONL");
  extract_cmd->add_option("--config", common.config_path, "config JSON");

  // stats ----------------------------------------------------------------
  auto* stats_cmd =
      app.add_subcommand("stats", "build the co-occurrence index");
  std::string st_records, st_corpus, st_out;
  int st_max_n = -1;
  stats_cmd->add_option("--records", st_records, "records JSONL");
  stats_cmd->add_option("--corpus", st_corpus, "corpus JSONL");
  stats_cmd->add_option("--max-n", st_max_n, "longest noun n-gram");
  stats_cmd->add_option("--out", st_out, "output index JSON");
  stats_cmd->add_option("--config", common.config_path, "config JSON");

  // keywords ---------------------------------------------------------------
  auto* kw_cmd = app.add_subcommand("keywords", "build company keyword tables");
  std::string kw_corpus, kw_out, kw_show, kw_idf_mode;
  int kw_k = -1, kw_top = 20;
  kw_cmd->add_option("--corpus", kw_corpus, "corpus JSONL");
  kw_cmd->add_option("--k", kw_k, "table size per company");
  kw_cmd->add_option("--idf-mode", kw_idf_mode, "companies|files");
  kw_cmd->add_option("--out", kw_out, "output keywords JSON");
  kw_cmd->add_option("--show", kw_show, "print a company's table");
  kw_cmd->add_option("--top", kw_top, "rows to print with --show");
  kw_cmd->add_option("--config", common.config_path, "config JSON");

  // rank ----------------------------------------------------------------
  auto* rank_cmd = app.add_subcommand("rank", "rank records for a keyword");
  std::string rk_records, rk_index, rk_keywords, rk_corpus, rk_keyword, rk_out;
  int rk_n = -1;
  bool rk_baseline = false;
  rank_cmd->add_option("--records", rk_records, "records JSONL");
  rank_cmd->add_option("--index", rk_index, "co-occurrence index JSON");
  rank_cmd->add_option("--keywords", rk_keywords, "keyword tables JSON");
  rank_cmd->add_option("--corpus", rk_corpus, "corpus JSONL");
  rank_cmd->add_option("--keyword", rk_keyword, "query keyword");
  rank_cmd->add_option("--n", rk_n, "ranking cutoff");
  rank_cmd->add_flag("--baseline", rk_baseline,
                     "rank by co-occurrence sum ascending");
  rank_cmd->add_option("--out", rk_out, "output ranking JSONL");
  rank_cmd->add_option("--config", common.config_path, "config JSON");

  // eval ----------------------------------------------------------------
  auto* eval_cmd = app.add_subcommand("eval", "score rankings against judgments");
  std::vector<std::string> ev_rankings, ev_baseline_rankings;
  std::string ev_judgments, ev_baseline_judgments, ev_ap_mode, ev_out;
  eval_cmd->add_option("--ranking", ev_rankings, "ranking JSONL (repeatable)");
  eval_cmd->add_option("--judgments", ev_judgments, "judgments TSV");
  eval_cmd->add_option("--baseline-ranking", ev_baseline_rankings,
                       "baseline ranking JSONL (repeatable)");
  eval_cmd->add_option("--baseline-judgments", ev_baseline_judgments,
                       "baseline judgments TSV");
  eval_cmd->add_option("--ap-mode", ev_ap_mode, "paper|standard");
  eval_cmd->add_option("--out", ev_out, "output report JSON");
  eval_cmd->add_option("--config", common.config_path, "config JSON");

  // demo ----------------------------------------------------------------
  auto* demo_cmd =
      app.add_subcommand("demo", "run the whole pipeline on the bundled corpus");
  std::string demo_out_dir = "demo_out";
  demo_cmd->add_option("--out-dir", demo_out_dir, "artifact directory");
  demo_cmd->add_option("--config", common.config_path, "config JSON")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    PipelineConfig config = common.config();

    if (ingest->parsed()) {
      const auto docs =
          parse_corpus(pick(ingest_corpus, config.paths.corpus, "corpus"));
      std::cout << corpus_summary(docs);
      return 0;
    }

    if (train_cmd->parsed()) {
      const auto docs =
          parse_corpus(pick(train_corpus, config.paths.corpus, "corpus"));
      Ontology ontology;
      const std::string onto_path =
          !train_ontology.empty() ? train_ontology : config.paths.ontology;
      if (!onto_path.empty()) ontology = load_ontology(onto_path);
      const auto examples = load_labeled_examples(
          docs, ontology, pick(train_labels, config.paths.labels, "labels"));
      TrainOptions opts;
      opts.lambda = lambda > 0 ? lambda : config.lambda;
      opts.epochs = epochs > 0 ? epochs : config.epochs;
      opts.seed = seed >= 0 ? static_cast<std::uint64_t>(seed) : config.seed;
      const LinearModel model = train(examples, opts);
      save_model(model, pick(train_model, config.paths.model, "model"));
      std::cerr << "trained on " << examples.size() << " examples, "
                << model.weights.size() << " features\n";
      return 0;
    }

    if (extract_cmd->parsed()) {
      const auto docs =
          parse_corpus(pick(ex_corpus, config.paths.corpus, "corpus"));
      const auto lexicon =
          load_clue_lexicon(pick(ex_clues, config.paths.clues, "clues"));
      Ontology ontology;
      const std::string onto_path =
          !ex_ontology.empty() ? ex_ontology : config.paths.ontology;
      if (!onto_path.empty()) ontology = load_ontology(onto_path);
      if (!ex_rules.empty()) config.paths.rules = ex_rules;
      const auto rules = rules_for(config);
      LinearModel model;
      const LinearModel* model_ptr = nullptr;
      if (!no_filter) {
        model = load_model(pick(ex_model, config.paths.model, "model"));
        model_ptr = &model;
      }
      const auto records =
          extract_all(docs, lexicon, ontology, model_ptr, rules);
      write_records(records, pick(ex_out, std::string(), "out"));
      std::cerr << "extracted " << records.size() << " records\n";
      return 0;
    }

    if (stats_cmd->parsed()) {
      const auto docs =
          parse_corpus(pick(st_corpus, config.paths.corpus, "corpus"));
      const auto records = load_records(pick(st_records, std::string(), "records"));
      const int max_n = st_max_n > 0 ? st_max_n : config.max_n;
      const auto index = build_index(records, docs, max_n);
      save_index(index, pick(st_out, config.paths.index, "out"));
      std::cerr << "indexed " << index.cause_count.size()
                << " cause n-grams, " << index.pair_count.size() << " pairs\n";
      return 0;
    }

    if (kw_cmd->parsed()) {
      if (!kw_show.empty()) {
        const auto store =
            load_keyword_store(pick(kw_out, config.paths.keywords, "keywords"));
        auto it = store.find(kw_show);
        if (it == store.end())
          throw std::runtime_error("no keyword table for company '" + kw_show +
                                   "'");
        std::vector<std::pair<std::string, double>> rows(
            it->second.entries.begin(), it->second.entries.end());
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
          if (a.second != b.second) return a.second > b.second;
          return a.first < b.first;
        });
        int shown = 0;
        for (const auto& [word, score] : rows) {
          if (shown++ >= kw_top) break;
          std::cout << word << '\t' << score << '\n';
        }
        return 0;
      }
      const auto docs =
          parse_corpus(pick(kw_corpus, config.paths.corpus, "corpus"));
      IdfMode mode = config.idf_mode;
      if (kw_idf_mode == "files") mode = IdfMode::Files;
      if (kw_idf_mode == "companies") mode = IdfMode::Companies;
      if (!kw_idf_mode.empty() && kw_idf_mode != "files" &&
          kw_idf_mode != "companies")
        throw std::runtime_error("unknown idf mode '" + kw_idf_mode + "'");
      const int k = kw_k > 0 ? kw_k : config.table_size;
      const auto sets = build_company_doc_sets(docs, mode);
      KeywordStore store;
      for (const auto& [company, set] : sets)
        store[company] = build_keyword_table(set, k);
      save_keyword_store(store, k, pick(kw_out, config.paths.keywords, "out"));
      std::cerr << "built keyword tables for " << store.size()
                << " companies\n";
      return 0;
    }

    if (rank_cmd->parsed()) {
      const auto docs =
          parse_corpus(pick(rk_corpus, config.paths.corpus, "corpus"));
      const auto records = load_records(pick(rk_records, std::string(), "records"));
      const auto index = load_index(pick(rk_index, config.paths.index, "index"));
      const auto store =
          load_keyword_store(pick(rk_keywords, config.paths.keywords, "keywords"));
      const std::string keyword = pick(rk_keyword, config.keyword, "keyword");
      const int n = rk_n > 0 ? rk_n : config.cutoff;
      const auto candidates = make_candidates(records, docs, index.max_n);
      const auto results =
          rk_baseline ? rank_baseline(keyword, candidates, index, store, n)
                      : rank_rare(keyword, candidates, index, store, n);
      write_ranking(results, keyword, pick(rk_out, std::string(), "out"));
      std::cerr << "ranked " << results.size() << " records for '" << keyword
                << "'\n";
      return 0;
    }

    if (eval_cmd->parsed()) {
      if (ev_rankings.empty())
        throw std::runtime_error("eval needs at least one --ranking file");
      ApMode mode = config.ap_mode;
      if (ev_ap_mode == "standard") mode = ApMode::Standard;
      if (ev_ap_mode == "paper") mode = ApMode::Paper;
      if (!ev_ap_mode.empty() && ev_ap_mode != "standard" &&
          ev_ap_mode != "paper")
        throw std::runtime_error("unknown ap mode '" + ev_ap_mode + "'");
      auto summarize = [](const std::vector<std::string>& paths) {
        std::vector<RankingSummary> out;
        for (const auto& p : paths) {
          std::string keyword;
          const auto ranking = load_ranking(p, &keyword);
          if (keyword.empty())
            throw std::runtime_error("ranking file " + p +
                                     " does not name its keyword");
          out.push_back({keyword, static_cast<int>(ranking.size())});
        }
        return out;
      };
      const auto judgments =
          load_judgments(pick(ev_judgments, config.paths.judgments, "judgments"));
      const EvalReport report =
          render_report(summarize(ev_rankings), judgments, mode);
      EvalReport baseline_report;
      const EvalReport* baseline_ptr = nullptr;
      if (!ev_baseline_rankings.empty()) {
        const auto baseline_judgments =
            ev_baseline_judgments.empty()
                ? judgments
                : load_judgments(ev_baseline_judgments);
        baseline_report = render_report(summarize(ev_baseline_rankings),
                                        baseline_judgments, mode);
        baseline_ptr = &baseline_report;
      }
      std::cout << report_to_text(report, baseline_ptr);
      if (!ev_out.empty()) {
        std::ofstream out(ev_out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write report: " + ev_out);
        out << report_to_json(report, baseline_ptr) << '\n';
      }
      return 0;
    }

    if (demo_cmd->parsed()) {
      std::cout << run_demo(config, demo_out_dir);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
