#include "rarecause/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace rarecause {

using nlohmann::json;

namespace {

// Fisher-Yates with raw mt19937 draws; std::shuffle is not pinned across
// standard libraries, this is.
void shuffle_indices(std::vector<int>& idx, std::mt19937_64& rng) {
  for (size_t i = idx.size(); i > 1; --i) {
    const size_t j = static_cast<size_t>(rng() % i);
    std::swap(idx[i - 1], idx[j]);
  }
}

}  // namespace

LinearModel train(const std::vector<LabeledExample>& examples,
                  const TrainOptions& options) {
  if (examples.empty()) throw std::invalid_argument("train: no examples");
  if (options.lambda <= 0.0)
    throw std::invalid_argument("train: lambda must be positive");
  bool has_pos = false, has_neg = false;
  for (const auto& ex : examples) (ex.causal ? has_pos : has_neg) = true;
  if (!has_pos || !has_neg)
    throw std::invalid_argument("train: both labels must be present");

  LinearModel model;
  model.hyper = options;
  // The bias rides along as a constant-one feature, so it shrinks with the
  // rest of the weight vector. Weights are kept as scale * stored to make
  // the per-step shrink O(1).
  std::map<std::string, double> stored;
  double stored_bias = 0.0;
  double scale = 1.0;

  std::mt19937_64 rng(options.seed);
  std::vector<int> order(examples.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);

  long t = 0;
  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    shuffle_indices(order, rng);
    for (int i : order) {
      ++t;
      const double eta = 1.0 / (options.lambda * static_cast<double>(t));
      const double shrink = 1.0 - eta * options.lambda;  // = 1 - 1/t
      if (shrink == 0.0) {
        stored.clear();
        stored_bias = 0.0;
        scale = 1.0;
      } else {
        scale *= shrink;
      }
      const LabeledExample& ex = examples[static_cast<size_t>(i)];
      const double y = ex.causal ? 1.0 : -1.0;
      double dot = 0.0;
      for (const auto& [key, value] : ex.features.values) {
        auto it = stored.find(key);
        if (it != stored.end()) dot += it->second * value;
      }
      dot = (dot + stored_bias) * scale;
      if (y * dot < 1.0) {
        for (const auto& [key, value] : ex.features.values)
          stored[key] += eta * y * value / scale;
        stored_bias += eta * y / scale;
      }
    }
  }

  for (const auto& [key, value] : stored) {
    const double w = value * scale;
    if (w != 0.0) model.weights[key] = w;
  }
  model.bias = stored_bias * scale;
  return model;
}

Prediction predict(const LinearModel& model, const FeatureVector& fv) {
  double margin = model.bias;
  for (const auto& [key, value] : fv.values) {
    auto it = model.weights.find(key);
    if (it != model.weights.end()) margin += it->second * value;
  }
  return Prediction{margin > 0.0, margin};
}

double hinge_objective(const LinearModel& model,
                       const std::vector<LabeledExample>& examples) {
  double sq = model.bias * model.bias;
  for (const auto& [key, w] : model.weights) sq += w * w;
  double hinge = 0.0;
  for (const auto& ex : examples) {
    const double y = ex.causal ? 1.0 : -1.0;
    hinge += std::max(0.0, 1.0 - y * predict(model, ex.features).margin);
  }
  return 0.5 * model.hyper.lambda * sq +
         hinge / static_cast<double>(examples.size());
}

void save_model(const LinearModel& model, const std::string& path) {
  json weights = json::object();
  for (const auto& [key, w] : model.weights) weights[key] = w;
  const json j{{"bias", model.bias},
               {"lambda", model.hyper.lambda},
               {"epochs", model.hyper.epochs},
               {"seed", model.hyper.seed},
               {"weights", weights}};
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write model file: " + path);
  out << j.dump(2) << '\n';
}

LinearModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed model file " + path + ": " + e.what());
  }
  LinearModel model;
  model.bias = j.value("bias", 0.0);
  model.hyper.lambda = j.value("lambda", 1e-4);
  model.hyper.epochs = j.value("epochs", 10);
  model.hyper.seed = j.value("seed", std::uint64_t{42});
  const json weights = j.value("weights", json::object());
  for (const auto& [key, w] : weights.items()) {
    const double v = w.get<double>();
    if (!std::isfinite(v))
      throw std::runtime_error("model file " + path +
                               ": non-finite weight for '" + key + "'");
    model.weights[key] = v;
  }
  return model;
}

}  // namespace rarecause
