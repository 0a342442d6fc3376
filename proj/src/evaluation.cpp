#include "rarecause/evaluation.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rarecause {

using nlohmann::json;

double precision_at(const std::vector<int>& judgments, int n) {
  if (n < 1 || n > static_cast<int>(judgments.size()))
    throw std::invalid_argument("precision_at: n out of range");
  int hits = 0;
  for (int i = 0; i < n; ++i) hits += judgments[i] ? 1 : 0;
  return static_cast<double>(hits) / n;
}

double average_precision(const std::vector<int>& judgments, int n_total,
                         ApMode mode) {
  if (static_cast<int>(judgments.size()) != n_total)
    throw std::invalid_argument(
        "average_precision: judgment list length must equal N");
  double sum = 0.0;
  int relevant = 0;
  for (int n = 1; n <= n_total; ++n) {
    if (judgments[n - 1]) {
      sum += precision_at(judgments, n);
      ++relevant;
    }
  }
  if (mode == ApMode::Standard) return relevant == 0 ? 0.0 : sum / relevant;
  return sum / n_total;
}

double mean_average_precision(const std::vector<JudgmentSet>& sets,
                              ApMode mode) {
  if (sets.empty())
    throw std::invalid_argument("mean_average_precision: no judgment sets");
  double sum = 0.0;
  for (const auto& set : sets)
    sum += average_precision(set.judgments,
                             static_cast<int>(set.judgments.size()), mode);
  return sum / static_cast<double>(sets.size());
}

EvalReport render_report(const std::vector<RankingSummary>& rankings,
                         const std::vector<JudgmentSet>& judgments,
                         ApMode mode) {
  if (rankings.empty())
    throw std::invalid_argument("render_report: no rankings");
  std::map<std::string, const JudgmentSet*> by_keyword;
  for (const auto& set : judgments) by_keyword[set.keyword] = &set;

  EvalReport report;
  std::vector<JudgmentSet> used;
  for (const auto& ranking : rankings) {
    auto it = by_keyword.find(ranking.keyword);
    if (it == by_keyword.end())
      throw std::runtime_error("no judgments for keyword '" + ranking.keyword +
                               "'");
    const JudgmentSet& set = *it->second;
    if (static_cast<int>(set.judgments.size()) != ranking.size)
      throw std::runtime_error(
          "judgments for keyword '" + ranking.keyword + "' cover " +
          std::to_string(set.judgments.size()) + " ranks but the ranking has " +
          std::to_string(ranking.size));
    KeywordEval row;
    row.keyword = ranking.keyword;
    row.precision = precision_at(set.judgments, ranking.size);
    row.average_precision = average_precision(set.judgments, ranking.size, mode);
    for (int n = 1; n <= ranking.size; ++n)
      row.curve.push_back(precision_at(set.judgments, n));
    report.rows.push_back(std::move(row));
    used.push_back(set);
  }
  double precision_sum = 0.0;
  for (const auto& row : report.rows) precision_sum += row.precision;
  report.mean_precision = precision_sum / report.rows.size();
  report.map = mean_average_precision(used, mode);
  return report;
}

std::vector<JudgmentSet> load_judgments(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open judgments file: " + path);
  std::map<std::string, std::map<int, int>> by_keyword;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string keyword, rank_str, rel_str;
    if (!std::getline(fields, keyword, '\t') ||
        !std::getline(fields, rank_str, '\t') ||
        !std::getline(fields, rel_str, '\t'))
      throw std::runtime_error("judgments line " + std::to_string(lineno) +
                               ": expected keyword<TAB>rank<TAB>relevant");
    int rank = 0, relevant = 0;
    try {
      rank = std::stoi(rank_str);
      relevant = std::stoi(rel_str);
    } catch (const std::exception&) {
      throw std::runtime_error("judgments line " + std::to_string(lineno) +
                               ": rank and relevant must be integers");
    }
    if (rank < 1 || (relevant != 0 && relevant != 1))
      throw std::runtime_error("judgments line " + std::to_string(lineno) +
                               ": rank must be >= 1 and relevant 0 or 1");
    if (!by_keyword[keyword].emplace(rank, relevant).second)
      throw std::runtime_error("judgments line " + std::to_string(lineno) +
                               ": duplicate rank for keyword '" + keyword +
                               "'");
  }
  std::vector<JudgmentSet> sets;
  for (const auto& [keyword, ranks] : by_keyword) {
    JudgmentSet set;
    set.keyword = keyword;
    int expected = 1;
    for (const auto& [rank, relevant] : ranks) {
      if (rank != expected)
        throw std::runtime_error("judgments for keyword '" + keyword +
                                 "': ranks must be contiguous from 1");
      set.judgments.push_back(relevant);
      ++expected;
    }
    sets.push_back(std::move(set));
  }
  return sets;
}

namespace {

json report_rows_json(const EvalReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"keyword", row.keyword},
                    {"precision", row.precision},
                    {"average_precision", row.average_precision},
                    {"precision_curve", row.curve}});
  }
  return json{{"keywords", rows},
              {"precision_average", report.mean_precision},
              {"map", report.map}};
}

}  // namespace

std::string report_to_json(const EvalReport& report,
                           const EvalReport* baseline) {
  json j{{"method", report_rows_json(report)}};
  if (baseline != nullptr) j["baseline"] = report_rows_json(*baseline);
  return j.dump(2);
}

std::string report_to_text(const EvalReport& report,
                           const EvalReport* baseline) {
  std::ostringstream out;
  char buf[64];
  out << "keyword\tprecision\tAP";
  if (baseline != nullptr) out << "\tbaseline P\tbaseline AP";
  out << '\n';
  for (size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    std::snprintf(buf, sizeof(buf), "%s\t%.4f\t%.4f", row.keyword.c_str(),
                  row.precision, row.average_precision);
    out << buf;
    if (baseline != nullptr && i < baseline->rows.size()) {
      std::snprintf(buf, sizeof(buf), "\t%.4f\t%.4f",
                    baseline->rows[i].precision,
                    baseline->rows[i].average_precision);
      out << buf;
    }
    out << '\n';
  }
  std::snprintf(buf, sizeof(buf), "average\t%.4f\t%.4f", report.mean_precision,
                report.map);
  out << buf;
  if (baseline != nullptr) {
    std::snprintf(buf, sizeof(buf), "\t%.4f\t%.4f", baseline->mean_precision,
                  baseline->map);
    out << buf;
  }
  out << '\n';
  return out.str();
}

}  // namespace rarecause
