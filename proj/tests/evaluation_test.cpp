#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>

#include "rarecause/evaluation.hpp"

using namespace rarecause;

namespace {

// n relevant out of 20, all relevant entries first.
std::vector<int> front_loaded(int relevant, int total = 20) {
  std::vector<int> out(total, 0);
  for (int i = 0; i < relevant; ++i) out[i] = 1;
  return out;
}

}  // namespace

TEST_SUITE("evaluation") {

TEST_CASE("precision over all-relevant lists is 1") {
  const std::vector<int> all(7, 1);
  for (int n = 1; n <= 7; ++n) CHECK(precision_at(all, n) == doctest::Approx(1.0));
}

TEST_CASE("18 of 20 relevant gives P@20 = 0.90") {
  CHECK(precision_at(front_loaded(18), 20) == doctest::Approx(0.90));
}

TEST_CASE("P@3 of [1,0,1] is 2/3") {
  CHECK(precision_at({1, 0, 1}, 3) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("out-of-range n is an error") {
  CHECK_THROWS_AS(precision_at({1, 0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(precision_at({1, 0}, 3), std::invalid_argument);
}

TEST_CASE("AP of an all-relevant list is 1, of none 0") {
  CHECK(average_precision(std::vector<int>(5, 1), 5) == doctest::Approx(1.0));
  CHECK(average_precision(std::vector<int>(5, 0), 5) == doctest::Approx(0.0));
}

TEST_CASE("AP of [1,0,1] at N=3 is 5/9 in paper mode") {
  CHECK(average_precision({1, 0, 1}, 3) == doctest::Approx(5.0 / 9.0));
  // Standard mode divides by the two relevant items instead.
  CHECK(average_precision({1, 0, 1}, 3, ApMode::Standard) ==
        doctest::Approx(5.0 / 6.0));
}

TEST_CASE("AP length mismatch is an error") {
  CHECK_THROWS_AS(average_precision({1, 0}, 3), std::invalid_argument);
}

TEST_CASE("paper AP equals standard AP scaled by relevant/N") {
  std::mt19937 rng(61);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 20);
    std::vector<int> judgments(n);
    int relevant = 0;
    for (auto& j : judgments) {
      j = static_cast<int>(rng() % 2);
      relevant += j;
    }
    const double paper = average_precision(judgments, n, ApMode::Paper);
    const double standard = average_precision(judgments, n, ApMode::Standard);
    CHECK(paper ==
          doctest::Approx(standard * relevant / static_cast<double>(n))
              .epsilon(1e-12));
    CHECK(paper >= 0.0);
    CHECK(paper <= 1.0);
  }
}

TEST_CASE("AP never exceeds the best precision prefix") {
  std::mt19937 rng(71);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 20);
    std::vector<int> judgments(n);
    for (auto& j : judgments) j = static_cast<int>(rng() % 2);
    double best_prefix = 0.0;
    for (int k = 1; k <= n; ++k)
      best_prefix = std::max(best_prefix, precision_at(judgments, k));
    for (const ApMode mode : {ApMode::Paper, ApMode::Standard}) {
      const double ap = average_precision(judgments, n, mode);
      CHECK(ap <= best_prefix + 1e-12);
      CHECK(ap >= 0.0);
      CHECK(ap <= 1.0);
    }
  }
}

TEST_CASE("front-loading the relevant items maximizes AP") {
  std::mt19937 rng(67);
  for (int round = 0; round < 300; ++round) {
    const int n = 2 + static_cast<int>(rng() % 15);
    std::vector<int> judgments(n);
    int relevant = 0;
    for (auto& j : judgments) {
      j = static_cast<int>(rng() % 2);
      relevant += j;
    }
    std::vector<int> best(n, 0);
    for (int i = 0; i < relevant; ++i) best[i] = 1;
    CHECK(average_precision(best, n) >=
          average_precision(judgments, n) - 1e-12);
  }
}

TEST_CASE("MAP of one keyword is its AP; two average arithmetically") {
  JudgmentSet a{"k1", {1, 0, 1}};
  CHECK(mean_average_precision({a}) ==
        doctest::Approx(average_precision({1, 0, 1}, 3)));
  // AP 0.2 and 0.4 average to 0.3: [1,0,0,0,0] -> 0.2, [1,1,0,0,0] -> 0.4
  JudgmentSet b{"k2", {1, 0, 0, 0, 0}};
  JudgmentSet c{"k3", {1, 1, 0, 0, 0}};
  CHECK(average_precision(b.judgments, 5) == doctest::Approx(0.2));
  CHECK(average_precision(c.judgments, 5) == doctest::Approx(0.4));
  CHECK(mean_average_precision({b, c}) == doctest::Approx(0.3));
  CHECK_THROWS_AS(mean_average_precision({}), std::invalid_argument);
}

TEST_CASE("four hand-built judgment lists match a manual MAP computation") {
  const JudgmentSet s1{"a", {1, 1, 0, 1}};
  const JudgmentSet s2{"b", {0, 1, 1, 1}};
  const JudgmentSet s3{"c", {0, 0, 0, 0}};
  const JudgmentSet s4{"d", {1, 1, 1, 1}};
  // per-keyword AP worked out by hand:
  //   a: (1 + 1 + 0 + 3/4) / 4               = 0.6875
  //   b: (1/2 + 2/3 + 3/4) / 4               = 0.4791666...
  //   c: 0
  //   d: 1
  const double expected = (0.6875 + (0.5 + 2.0 / 3.0 + 0.75) / 4.0 + 0.0 + 1.0) / 4.0;
  CHECK(mean_average_precision({s1, s2, s3, s4}) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("report reproduces the four-keyword precision table") {
  // Method: 18/20, 17/20, 13/20, 16/20; baseline: 14/20, 9/20, 10/20, 14/20.
  const std::vector<RankingSummary> rankings = {
      {"hot_summer", 20}, {"cold_summer", 20}, {"hot_winter", 20},
      {"cold_winter", 20}};
  const std::vector<JudgmentSet> method = {
      {"hot_summer", front_loaded(18)},
      {"cold_summer", front_loaded(17)},
      {"hot_winter", front_loaded(13)},
      {"cold_winter", front_loaded(16)},
  };
  const std::vector<JudgmentSet> baseline = {
      {"hot_summer", front_loaded(14)},
      {"cold_summer", front_loaded(9)},
      {"hot_winter", front_loaded(10)},
      {"cold_winter", front_loaded(14)},
  };
  const EvalReport m = render_report(rankings, method);
  CHECK(m.rows[0].precision == doctest::Approx(0.90).epsilon(1e-9));
  CHECK(m.rows[1].precision == doctest::Approx(0.85).epsilon(1e-9));
  CHECK(m.rows[2].precision == doctest::Approx(0.65).epsilon(1e-9));
  CHECK(m.rows[3].precision == doctest::Approx(0.80).epsilon(1e-9));
  CHECK(m.mean_precision == doctest::Approx(0.80).epsilon(1e-9));
  const EvalReport b = render_report(rankings, baseline);
  CHECK(b.mean_precision == doctest::Approx(0.5875).epsilon(1e-9));
  // per-rank curves end at the per-keyword precision
  for (const auto& row : m.rows) {
    REQUIRE(row.curve.size() == 20);
    CHECK(row.curve.back() == doctest::Approx(row.precision));
  }
  const std::string text = report_to_text(m, &b);
  CHECK(text.find("0.8000") != std::string::npos);
  CHECK(text.find("0.5875") != std::string::npos);
}

TEST_CASE("missing judgments name the keyword") {
  CHECK_THROWS_WITH_AS(
      render_report({{"mystery", 3}}, {{JudgmentSet{"other", {1, 0, 1}}}}),
      doctest::Contains("mystery"), std::runtime_error);
  CHECK_THROWS_AS(render_report({}, {}), std::invalid_argument);
}

TEST_CASE("judgment TSV loads, validates, and rejects gaps") {
  const std::string path = "judgments_test.tsv";
  {
    std::ofstream out(path);
    out << "猛暑\t1\t1\n猛暑\t2\t0\n冷夏\t1\t1\n";
  }
  const auto sets = load_judgments(path);
  REQUIRE(sets.size() == 2);
  CHECK(sets[1].keyword == "猛暑");
  CHECK(sets[1].judgments == std::vector<int>{1, 0});
  {
    std::ofstream out(path);
    out << "猛暑\t1\t1\n猛暑\t3\t0\n";
  }
  CHECK_THROWS_AS(load_judgments(path), std::runtime_error);
  {
    std::ofstream out(path);
    out << "猛暑\t1\t7\n";
  }
  CHECK_THROWS_AS(load_judgments(path), std::runtime_error);
  std::remove(path.c_str());
}

}  // TEST_SUITE
