#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <random>

#include "rarecause/classifier.hpp"

using namespace rarecause;

namespace {

FeatureVector fv(std::initializer_list<std::pair<std::string, int>> items) {
  FeatureVector v;
  for (const auto& [key, value] : items) v.values[key] = value;
  return v;
}

// 100 separable examples: a class feature plus shared noise features.
std::vector<LabeledExample> separable_set(unsigned seed, double noise_rate) {
  std::mt19937 rng(seed);
  std::vector<LabeledExample> examples;
  for (int i = 0; i < 100; ++i) {
    const bool causal = i % 2 == 0;
    LabeledExample ex;
    ex.causal = causal;
    ex.features.bump(causal ? "uni:pos" : "uni:neg");
    ex.features.bump("shared:" + std::to_string(rng() % 10),
                     1 + static_cast<int>(rng() % 3));
    examples.push_back(std::move(ex));
  }
  if (noise_rate > 0.0) {
    const int flips = static_cast<int>(noise_rate * examples.size());
    for (int i = 0; i < flips; ++i) {
      const size_t at = rng() % examples.size();
      examples[at].causal = !examples[at].causal;
    }
  }
  return examples;
}

double training_accuracy(const LinearModel& model,
                         const std::vector<LabeledExample>& examples) {
  int correct = 0;
  for (const auto& ex : examples)
    if (predict(model, ex.features).causal == ex.causal) ++correct;
  return static_cast<double>(correct) / examples.size();
}

}  // namespace

TEST_SUITE("classifier") {

TEST_CASE("two disjoint examples train to positive margins") {
  std::vector<LabeledExample> examples;
  examples.push_back({fv({{"a", 1}}), true});
  examples.push_back({fv({{"b", 1}}), false});
  TrainOptions opts;
  opts.lambda = 1e-3;
  opts.epochs = 50;
  const LinearModel model = train(examples, opts);
  const auto pos = predict(model, examples[0].features);
  const auto neg = predict(model, examples[1].features);
  CHECK(pos.causal);
  CHECK(pos.margin > 0.0);
  CHECK_FALSE(neg.causal);
  CHECK(neg.margin < 0.0);
}

TEST_CASE("training is bit-identical for a fixed seed") {
  const auto examples = separable_set(7, 0.0);
  TrainOptions opts;
  opts.seed = 1234;
  const LinearModel a = train(examples, opts);
  const LinearModel b = train(examples, opts);
  CHECK(a.bias == b.bias);
  REQUIRE(a.weights.size() == b.weights.size());
  for (auto ita = a.weights.begin(), itb = b.weights.begin();
       ita != a.weights.end(); ++ita, ++itb) {
    CHECK(ita->first == itb->first);
    CHECK(ita->second == itb->second);
  }
  TrainOptions other = opts;
  other.seed = 99;
  const LinearModel c = train(examples, other);
  CHECK(c.bias != a.bias);  // different shuffles move the bias
}

TEST_CASE("empty and single-class inputs are rejected") {
  CHECK_THROWS_AS(train({}, TrainOptions{}), std::invalid_argument);
  std::vector<LabeledExample> one_class;
  one_class.push_back({fv({{"a", 1}}), true});
  one_class.push_back({fv({{"b", 1}}), true});
  CHECK_THROWS_AS(train(one_class, TrainOptions{}), std::invalid_argument);
}

TEST_CASE("empty vector with zero bias is non-causal") {
  LinearModel model;
  const auto p = predict(model, FeatureVector{});
  CHECK(p.margin == 0.0);
  CHECK_FALSE(p.causal);
}

TEST_CASE("margin arithmetic") {
  LinearModel model;
  model.weights["f"] = 2.0;
  model.bias = -1.0;
  const auto p = predict(model, fv({{"f", 1}}));
  CHECK(p.margin == doctest::Approx(1.0));
  CHECK(p.causal);
}

TEST_CASE("margin is linear over disjoint keys") {
  std::mt19937 rng(11);
  for (int round = 0; round < 200; ++round) {
    LinearModel model;
    model.bias = (static_cast<double>(rng() % 100) - 50) / 25.0;
    for (char c = 'a'; c <= 'j'; ++c)
      model.weights[std::string(1, c)] =
          (static_cast<double>(rng() % 200) - 100) / 50.0;
    FeatureVector left, right, both;
    for (char c = 'a'; c <= 'e'; ++c) {
      const int v = 1 + static_cast<int>(rng() % 3);
      left.values[std::string(1, c)] = v;
      both.values[std::string(1, c)] = v;
    }
    for (char c = 'f'; c <= 'j'; ++c) {
      const int v = 1 + static_cast<int>(rng() % 3);
      right.values[std::string(1, c)] = v;
      both.values[std::string(1, c)] = v;
    }
    const double lhs = predict(model, both).margin;
    const double rhs = predict(model, left).margin +
                       predict(model, right).margin - model.bias;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("objective does not increase over training") {
  const auto examples = separable_set(21, 0.1);
  TrainOptions opts;
  opts.lambda = 0.01;
  opts.epochs = 20;
  LinearModel untrained;
  untrained.hyper = opts;
  const double before = hinge_objective(untrained, examples);
  const LinearModel model = train(examples, opts);
  CHECK(hinge_objective(model, examples) <= before);
  CHECK(before == doctest::Approx(1.0));  // all-zero model: hinge 1 everywhere
}

TEST_CASE("separable 100-example set reaches accuracy 1.0") {
  const auto examples = separable_set(3, 0.0);
  TrainOptions opts;
  opts.lambda = 1e-4;
  opts.epochs = 30;
  const LinearModel model = train(examples, opts);
  CHECK(training_accuracy(model, examples) == doctest::Approx(1.0));
}

TEST_CASE("model survives a save/load round trip") {
  const auto examples = separable_set(5, 0.0);
  const LinearModel model = train(examples, TrainOptions{});
  const std::string path = "classifier_roundtrip_model.json";
  save_model(model, path);
  const LinearModel loaded = load_model(path);
  CHECK(loaded.bias == model.bias);
  CHECK(loaded.weights == model.weights);
  CHECK(loaded.hyper.lambda == model.hyper.lambda);
  CHECK(loaded.hyper.epochs == model.hyper.epochs);
  CHECK(loaded.hyper.seed == model.hyper.seed);
  std::remove(path.c_str());
}

}  // TEST_SUITE
