// Max-margin linear classifier for causal-sentence filtering: L2-regularized
// hinge loss minimized by seeded stochastic subgradient descent with step
// 1/(lambda * t). The bias is trained as a constant-one feature, i.e. it is
// part of the regularized weight vector.
#ifndef RARECAUSE_CLASSIFIER_HPP
#define RARECAUSE_CLASSIFIER_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rarecause/features.hpp"

namespace rarecause {

struct LabeledExample {
  FeatureVector features;
  bool causal = false;
};

struct TrainOptions {
  double lambda = 1e-4;
  int epochs = 10;
  std::uint64_t seed = 42;
};

struct LinearModel {
  std::map<std::string, double> weights;
  double bias = 0.0;
  TrainOptions hyper;
};

struct Prediction {
  bool causal = false;
  double margin = 0.0;
};

// Deterministic for a fixed seed. Throws on an empty example list or when
// only one label is present.
LinearModel train(const std::vector<LabeledExample>& examples,
                  const TrainOptions& options);

// margin = sum(weights[f] * value) + bias; causal iff margin > 0.
Prediction predict(const LinearModel& model, const FeatureVector& fv);

// Regularized objective: lambda/2 * (|w|^2 + bias^2) + mean hinge loss.
double hinge_objective(const LinearModel& model,
                       const std::vector<LabeledExample>& examples);

void save_model(const LinearModel& model, const std::string& path);
LinearModel load_model(const std::string& path);

}  // namespace rarecause

#endif  // RARECAUSE_CLASSIFIER_HPP
