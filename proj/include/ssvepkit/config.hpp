#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssvepkit/dataset.hpp"
#include "ssvepkit/decision.hpp"
#include "ssvepkit/logistic.hpp"
#include "ssvepkit/preprocess.hpp"
#include "ssvepkit/synth.hpp"

namespace ssvep {

enum class Method { bifb, uf, psda, cca };

const char* method_name(Method m);
Method method_from_name(const std::string& name);

struct SegmentConfig {
  double length_s{2.0};
  double overlap{0.5};
  std::size_t zero_pad_factor{1};
};

struct DecisionConfig {
  std::size_t t_required{3};
  std::size_t window_t{4};
  bool single_shot{false};  // shorthand for t=1, T=1

  DecisionRule rule() const {
    return single_shot ? DecisionRule{1, 1} : DecisionRule{t_required, window_t};
  }
};

struct BifbConfig {
  double gamma{1.0};       // gain/bandwidth shaping exponent
  double bw_base_hz{1.0};  // bandwidth floor before shaping
  double bw_scale{1.0};
  std::optional<std::vector<double>> gains;          // explicit 2K override
  std::optional<std::vector<double>> bandwidths_hz;  // explicit 2K override
  std::optional<ResponseProfile> profile;            // default profile if absent
};

struct GridAxis {
  std::string key;  // e.g. "train.lambda", "segment.length_s", "bifb.gamma"
  std::vector<double> values;
};

struct GridSpec {
  std::vector<GridAxis> axes;
  std::size_t total_points() const {
    std::size_t n = 1;
    for (const auto& a : axes) n *= a.values.size();
    return axes.empty() ? 0 : n;
  }
};

struct ExperimentConfig {
  std::string dataset_path;
  Method method{Method::bifb};
  PreprocessConfig preprocess;
  SegmentConfig segment;
  DecisionConfig decision;
  BifbConfig bifb;
  double uf_half_width_hz{1.0};
  double psda_half_width_hz{1.0};
  std::size_t cca_harmonics{2};
  TrainConfig train;
  std::string output_dir{"out"};
  GridSpec grid;

  bool trainable() const { return method == Method::bifb || method == Method::uf; }
};

struct SynthDatasetConfig {
  std::string name{"synthetic"};
  std::vector<double> stimulus_frequencies_hz;
  double sampling_rate_hz{256.0};
  std::size_t n_channels{2};
  std::vector<std::string> channel_names;  // defaults when empty
  std::size_t n_subjects{4};
  std::size_t repetitions{5};
  double duration_s{8.0};
  ResponseProfile profile;  // default profile when control points empty
  double harmonic_ratio{0.5};
  double noise_exponent{1.0};
  double snr_scale{1.0};
  std::uint64_t seed{0};
  std::string output_dir{"out"};
};

// JSON loading with dotted-path overrides ("train.lambda=0.5"). Overrides are
// applied to the document before parsing.
ExperimentConfig load_experiment_config(const std::string& path,
                                        const std::vector<std::string>& overrides = {});
SynthDatasetConfig load_synth_config(const std::string& path,
                                     const std::vector<std::string>& overrides = {});

ExperimentConfig experiment_config_from_json_text(const std::string& text);
SynthDatasetConfig synth_config_from_json_text(const std::string& text);

// Numeric grid-axis override on a parsed config; throws InvalidConfig for
// unknown keys.
void apply_axis_value(ExperimentConfig& cfg, const std::string& key, double value);

// Deterministic synthetic dataset (manifest + recordings) in memory.
Dataset synthesize_dataset(const SynthDatasetConfig& cfg);

}  // namespace ssvep
