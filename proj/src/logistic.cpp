#include "ssvepkit/logistic.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "ssvepkit/error.hpp"
#include <nlohmann/json.hpp>

using ordered_json = nlohmann::ordered_json;

namespace ssvep {

double sigmoid(double z) {
  z = std::clamp(z, -700.0, 700.0);
  if (z >= 0.0) {
    return 1.0 / (1.0 + std::exp(-z));
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

namespace {

double score(const std::vector<double>& theta, const std::vector<double>& x) {
  double z = theta[0];
  for (std::size_t j = 0; j < x.size(); ++j) z += theta[j + 1] * x[j];
  return z;
}

void check_training_inputs(const std::vector<double>& theta,
                           const std::vector<std::vector<double>>& features,
                           const std::vector<int>& labels) {
  if (features.empty() || features.size() != labels.size()) {
    throw Error(ErrorCode::dimension_mismatch, "need one label per feature row");
  }
  for (const auto& row : features) {
    if (row.size() + 1 != theta.size()) {
      throw Error(ErrorCode::dimension_mismatch, "feature/theta length mismatch");
    }
  }
}

// -y log(h) - (1-y) log(1-h) evaluated from the raw score; softplus keeps the
// log arguments away from 0.
double cross_entropy(double z, int y) {
  const double sp = std::max(-z, 0.0) + std::log1p(std::exp(-std::fabs(z)));
  return sp + (1 - y) * z;
}

}  // namespace

double logistic_cost(const std::vector<double>& theta,
                     const std::vector<std::vector<double>>& features,
                     const std::vector<int>& labels, double lambda) {
  check_training_inputs(theta, features, labels);
  const double m = static_cast<double>(features.size());
  double cost = 0.0;
  for (std::size_t i = 0; i < features.size(); ++i) {
    cost += cross_entropy(score(theta, features[i]), labels[i]);
  }
  cost /= m;
  double penalty = 0.0;
  for (std::size_t j = 1; j < theta.size(); ++j) penalty += theta[j] * theta[j];
  return cost + lambda / (2.0 * m) * penalty;
}

std::vector<double> logistic_gradient(const std::vector<double>& theta,
                                      const std::vector<std::vector<double>>& features,
                                      const std::vector<int>& labels, double lambda) {
  check_training_inputs(theta, features, labels);
  const double m = static_cast<double>(features.size());
  std::vector<double> grad(theta.size(), 0.0);
  for (std::size_t i = 0; i < features.size(); ++i) {
    const double err = sigmoid(score(theta, features[i])) - labels[i];
    grad[0] += err;
    for (std::size_t j = 0; j < features[i].size(); ++j) {
      grad[j + 1] += err * features[i][j];
    }
  }
  for (auto& g : grad) g /= m;
  for (std::size_t j = 1; j < theta.size(); ++j) grad[j] += lambda / m * theta[j];
  return grad;
}

std::vector<double> minimize_logistic(const std::vector<std::vector<double>>& features,
                                      const std::vector<int>& labels,
                                      const TrainConfig& cfg, bool* converged) {
  const std::size_t dim = features.front().size() + 1;
  std::vector<double> theta(dim, 0.0);
  std::vector<double> best = theta;
  double prev_cost = logistic_cost(theta, features, labels, cfg.lambda);
  double best_cost = prev_cost;
  bool done = false;

  for (std::size_t it = 0; it < cfg.max_iterations; ++it) {
    const auto grad = logistic_gradient(theta, features, labels, cfg.lambda);
    for (std::size_t j = 0; j < dim; ++j) theta[j] -= cfg.learning_rate * grad[j];
    const double cost = logistic_cost(theta, features, labels, cfg.lambda);
    if (cost < best_cost) {
      best_cost = cost;
      best = theta;
    }
    if (std::fabs(prev_cost - cost) < cfg.convergence_tol) {
      done = true;
      break;
    }
    prev_cost = cost;
  }
  if (converged) *converged = done;
  return best;
}

OvaModel train_ova(const std::vector<std::vector<double>>& features,
                   const std::vector<std::size_t>& class_of, std::size_t n_classes,
                   const std::vector<double>& class_frequencies_hz,
                   const TrainConfig& cfg) {
  if (features.empty() || features.size() != class_of.size()) {
    throw Error(ErrorCode::dimension_mismatch, "need one class label per feature row");
  }
  if (n_classes < 2) throw Error(ErrorCode::k_too_small, "need at least 2 classes");
  std::vector<std::size_t> counts(n_classes, 0);
  for (std::size_t c : class_of) {
    if (c >= n_classes) {
      throw Error(ErrorCode::dimension_mismatch, "class label out of range");
    }
    ++counts[c];
  }
  for (std::size_t k = 0; k < n_classes; ++k) {
    if (counts[k] == 0) {
      throw Error(ErrorCode::missing_class,
                  "class " + std::to_string(k) + " has no training examples");
    }
  }

  OvaModel model;
  model.lambda = cfg.lambda;
  model.class_frequencies_hz = class_frequencies_hz;
  model.standardized = cfg.feature_standardization;

  std::vector<std::vector<double>> train = features;
  const std::size_t dim = features.front().size();
  if (cfg.feature_standardization) {
    model.feature_mean.assign(dim, 0.0);
    model.feature_scale.assign(dim, 1.0);
    const double m = static_cast<double>(train.size());
    for (std::size_t j = 0; j < dim; ++j) {
      double mean = 0.0;
      for (const auto& row : train) mean += row[j];
      mean /= m;
      double var = 0.0;
      for (const auto& row : train) var += (row[j] - mean) * (row[j] - mean);
      var /= m;
      const double sd = std::sqrt(var);
      model.feature_mean[j] = mean;
      model.feature_scale[j] = sd > 0.0 ? sd : 1.0;
    }
    for (auto& row : train) {
      for (std::size_t j = 0; j < dim; ++j) {
        row[j] = (row[j] - model.feature_mean[j]) / model.feature_scale[j];
      }
    }
  }

  model.thetas.resize(n_classes);
  model.converged = true;
  for (std::size_t k = 0; k < n_classes; ++k) {
    std::vector<int> labels(train.size());
    for (std::size_t i = 0; i < train.size(); ++i) labels[i] = class_of[i] == k ? 1 : 0;
    bool done = false;
    model.thetas[k] = minimize_logistic(train, labels, cfg, &done);
    model.converged = model.converged && done;
  }
  return model;
}

Prediction predict_candidate(const OvaModel& model, const std::vector<double>& features) {
  if (features.size() != model.n_features()) {
    throw Error(ErrorCode::dimension_mismatch,
                "feature length " + std::to_string(features.size()) +
                    " does not match model (" + std::to_string(model.n_features()) + ")");
  }
  std::vector<double> x = features;
  if (model.standardized) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      x[j] = (x[j] - model.feature_mean[j]) / model.feature_scale[j];
    }
  }
  Prediction pred;
  pred.probabilities.resize(model.n_classes());
  for (std::size_t k = 0; k < model.n_classes(); ++k) {
    pred.probabilities[k] = sigmoid(score(model.thetas[k], x));
  }
  pred.class_index = 0;
  for (std::size_t k = 1; k < pred.probabilities.size(); ++k) {
    if (pred.probabilities[k] > pred.probabilities[pred.class_index]) {
      pred.class_index = k;
    }
  }
  return pred;
}

std::string model_to_json(const OvaModel& model) {
  ordered_json j;
  j["thetas"] = model.thetas;
  j["lambda"] = model.lambda;
  j["class_frequencies_hz"] = model.class_frequencies_hz;
  j["standardized"] = model.standardized;
  j["feature_mean"] = model.feature_mean;
  j["feature_scale"] = model.feature_scale;
  j["converged"] = model.converged;
  return j.dump(2);
}

OvaModel model_from_json(const std::string& text) {
  OvaModel model;
  try {
    const auto j = ordered_json::parse(text);
    model.thetas = j.at("thetas").get<std::vector<std::vector<double>>>();
    model.lambda = j.at("lambda").get<double>();
    model.class_frequencies_hz = j.at("class_frequencies_hz").get<std::vector<double>>();
    model.standardized = j.at("standardized").get<bool>();
    model.feature_mean = j.at("feature_mean").get<std::vector<double>>();
    model.feature_scale = j.at("feature_scale").get<std::vector<double>>();
    model.converged = j.at("converged").get<bool>();
  } catch (const std::exception& e) {
    throw Error(ErrorCode::invalid_config, "model JSON: " + std::string(e.what()));
  }
  return model;
}

void save_model(const OvaModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_failure, "cannot write " + path);
  out << model_to_json(model) << "\n";
}

OvaModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::missing_file, "cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return model_from_json(text);
}

}  // namespace ssvep
