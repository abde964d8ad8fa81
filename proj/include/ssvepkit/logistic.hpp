#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ssvep {

// One-vs-all regularized logistic regression over 2K filter-bank features.
// thetas[k] has length 2K+1 (bias first); the bias is never penalized.
struct OvaModel {
  std::vector<std::vector<double>> thetas;
  double lambda{0.0};
  std::vector<double> class_frequencies_hz;
  bool standardized{false};
  std::vector<double> feature_mean;   // empty unless standardized
  std::vector<double> feature_scale;  // empty unless standardized
  bool converged{true};

  std::size_t n_classes() const { return thetas.size(); }
  std::size_t n_features() const {
    return thetas.empty() ? 0 : thetas[0].size() - 1;
  }
};

struct TrainConfig {
  double learning_rate{0.3};
  std::size_t max_iterations{5000};
  double convergence_tol{1e-9};  // on cost decrease
  double lambda{0.1};
  bool feature_standardization{true};
};

struct Prediction {
  std::size_t class_index{0};
  std::vector<double> probabilities;  // K independent sigmoids, no softmax
};

// 1/(1 + e^-z); input clamped to +-700 so extreme scores saturate to
// representable values instead of rounding to exactly 0 or 1.
double sigmoid(double z);

// Mean cross-entropy of Eq-style binary logistic regression plus
// (lambda/2M) * sum_{j>=1} theta_j^2. Rows of features are raw (unaugmented)
// vectors; theta has length n_features+1 with the bias first.
double logistic_cost(const std::vector<double>& theta,
                     const std::vector<std::vector<double>>& features,
                     const std::vector<int>& labels, double lambda);

std::vector<double> logistic_gradient(const std::vector<double>& theta,
                                      const std::vector<std::vector<double>>& features,
                                      const std::vector<int>& labels, double lambda);

// Fixed-step gradient descent from zeros, stopping on cost decrease below
// convergence_tol. Returns the best iterate; sets *converged.
std::vector<double> minimize_logistic(const std::vector<std::vector<double>>& features,
                                      const std::vector<int>& labels,
                                      const TrainConfig& cfg, bool* converged);

// K one-vs-rest fits. class_of[i] in [0, K). Every class must appear.
OvaModel train_ova(const std::vector<std::vector<double>>& features,
                   const std::vector<std::size_t>& class_of, std::size_t n_classes,
                   const std::vector<double>& class_frequencies_hz,
                   const TrainConfig& cfg);

// argmax_k of the K class probabilities, ties toward the lowest index.
Prediction predict_candidate(const OvaModel& model, const std::vector<double>& features);

// JSON round-trip, exact to the last bit (shortest round-trip formatting).
std::string model_to_json(const OvaModel& model);
OvaModel model_from_json(const std::string& text);
void save_model(const OvaModel& model, const std::string& path);
OvaModel load_model(const std::string& path);

}  // namespace ssvep
