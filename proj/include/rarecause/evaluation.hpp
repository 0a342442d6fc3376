// Precision@n, average precision, and MAP over ranked output judged by a
// human relevance file. The default AP divides by the list length; the
// standard definition (divide by the relevant count) is available as a mode.
#ifndef RARECAUSE_EVALUATION_HPP
#define RARECAUSE_EVALUATION_HPP

#include <string>
#include <vector>

namespace rarecause {

enum class ApMode { Paper, Standard };

struct JudgmentSet {
  std::string keyword;
  std::vector<int> judgments;  // 1 = relevant, aligned to ranks 1..N
};

double precision_at(const std::vector<int>& judgments, int n);

// Paper mode: (1/N) * sum T_n * P@n. Standard mode divides by the number
// of relevant items instead (0 when there are none). Judgment length must
// equal n_total.
double average_precision(const std::vector<int>& judgments, int n_total,
                         ApMode mode = ApMode::Paper);

double mean_average_precision(const std::vector<JudgmentSet>& sets,
                              ApMode mode = ApMode::Paper);

struct KeywordEval {
  std::string keyword;
  double precision = 0.0;          // P@N over the whole judged list
  double average_precision = 0.0;  // per the selected mode
  std::vector<double> curve;       // P@1..P@N
};

struct EvalReport {
  std::vector<KeywordEval> rows;
  double mean_precision = 0.0;  // arithmetic mean of per-keyword precision
  double map = 0.0;
};

struct RankingSummary {
  std::string keyword;
  int size = 0;
};

// Pairs each ranking with its judgment set and aggregates. Throws when a
// ranking's keyword has no judgments or the lengths disagree.
EvalReport render_report(const std::vector<RankingSummary>& rankings,
                         const std::vector<JudgmentSet>& judgments,
                         ApMode mode = ApMode::Paper);

// Judgments file: TSV keyword<TAB>rank<TAB>relevant(0|1).
std::vector<JudgmentSet> load_judgments(const std::string& path);

std::string report_to_json(const EvalReport& report,
                           const EvalReport* baseline = nullptr);
std::string report_to_text(const EvalReport& report,
                           const EvalReport* baseline = nullptr);

}  // namespace rarecause

#endif  // RARECAUSE_EVALUATION_HPP
