#include "ssvepkit/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ssvepkit/error.hpp"
#include <nlohmann/json.hpp>

using ordered_json = nlohmann::ordered_json;

namespace ssvep {

const char* method_name(Method m) {
  switch (m) {
    case Method::bifb: return "bifb";
    case Method::uf: return "uf";
    case Method::psda: return "psda";
    case Method::cca: return "cca";
  }
  return "?";
}

Method method_from_name(const std::string& name) {
  if (name == "bifb") return Method::bifb;
  if (name == "uf") return Method::uf;
  if (name == "psda") return Method::psda;
  if (name == "cca") return Method::cca;
  throw Error(ErrorCode::invalid_config,
              "unknown method '" + name + "' (expected bifb|uf|psda|cca)");
}

namespace {

ordered_json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::missing_file, "cannot open config " + path);
  try {
    ordered_json j;
    in >> j;
    return j;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::invalid_config, path + ": " + std::string(e.what()));
  }
}

void apply_override(ordered_json& doc, const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw Error(ErrorCode::invalid_config, "override must look like key.path=value");
  }
  const std::string path = spec.substr(0, eq);
  const std::string raw = spec.substr(eq + 1);

  ordered_json value;
  try {
    value = ordered_json::parse(raw);
  } catch (...) {
    value = raw;  // plain string
  }

  ordered_json* node = &doc;
  std::stringstream ss(path);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(ss, part, '.')) parts.push_back(part);
  if (parts.empty()) throw Error(ErrorCode::invalid_config, "empty override path");
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) node = &(*node)[parts[i]];
  (*node)[parts.back()] = value;
}

ResponseProfile profile_from_json(const ordered_json& j) {
  ResponseProfile profile;
  for (const auto& cp : j) {
    if (!cp.is_array() || cp.size() != 2) {
      throw Error(ErrorCode::invalid_config, "profile control points must be [f, amplitude] pairs");
    }
    profile.control_points.emplace_back(cp[0].get<double>(), cp[1].get<double>());
  }
  validate_profile(profile);
  return profile;
}

template <typename T>
void maybe_get(const ordered_json& j, const char* key, T& out) {
  if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

}  // namespace

ExperimentConfig experiment_config_from_json_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::invalid_config, std::string("config JSON: ") + e.what());
  }

  ExperimentConfig cfg;
  try {
    cfg.dataset_path = j.at("dataset").get<std::string>();
    cfg.method = method_from_name(j.at("method").get<std::string>());
    maybe_get(j, "output_dir", cfg.output_dir);

    if (j.contains("preprocess")) {
      const auto& p = j.at("preprocess");
      if (p.contains("reference_channel") && !p.at("reference_channel").is_null()) {
        cfg.preprocess.reference_channel = p.at("reference_channel").get<std::string>();
      }
      if (p.contains("bandpass_low_hz") && !p.at("bandpass_low_hz").is_null()) {
        cfg.preprocess.bandpass_low_hz = p.at("bandpass_low_hz").get<double>();
      }
      if (p.contains("bandpass_high_hz") && !p.at("bandpass_high_hz").is_null()) {
        cfg.preprocess.bandpass_high_hz = p.at("bandpass_high_hz").get<double>();
      }
      if (p.contains("notch_hz") && !p.at("notch_hz").is_null()) {
        cfg.preprocess.notch_hz = p.at("notch_hz").get<double>();
      }
      maybe_get(p, "notch_q", cfg.preprocess.notch_q);
      maybe_get(p, "bandpass_order", cfg.preprocess.bandpass_order);
      maybe_get(p, "analysis_channel", cfg.preprocess.analysis_channel);
    }
    if (j.contains("segment")) {
      const auto& s = j.at("segment");
      maybe_get(s, "length_s", cfg.segment.length_s);
      maybe_get(s, "overlap", cfg.segment.overlap);
      maybe_get(s, "zero_pad_factor", cfg.segment.zero_pad_factor);
    }
    if (j.contains("decision")) {
      const auto& d = j.at("decision");
      maybe_get(d, "t_required", cfg.decision.t_required);
      maybe_get(d, "window_t", cfg.decision.window_t);
      maybe_get(d, "single_shot", cfg.decision.single_shot);
    }
    if (j.contains("bifb")) {
      const auto& b = j.at("bifb");
      maybe_get(b, "gamma", cfg.bifb.gamma);
      maybe_get(b, "bw_base_hz", cfg.bifb.bw_base_hz);
      maybe_get(b, "bw_scale", cfg.bifb.bw_scale);
      if (b.contains("gains") && !b.at("gains").is_null()) {
        cfg.bifb.gains = b.at("gains").get<std::vector<double>>();
      }
      if (b.contains("bandwidths_hz") && !b.at("bandwidths_hz").is_null()) {
        cfg.bifb.bandwidths_hz = b.at("bandwidths_hz").get<std::vector<double>>();
      }
      if (b.contains("profile") && !b.at("profile").is_null()) {
        cfg.bifb.profile = profile_from_json(b.at("profile"));
      }
    }
    if (j.contains("uf")) maybe_get(j.at("uf"), "half_width_hz", cfg.uf_half_width_hz);
    if (j.contains("psda")) maybe_get(j.at("psda"), "half_width_hz", cfg.psda_half_width_hz);
    if (j.contains("cca")) maybe_get(j.at("cca"), "n_harmonics", cfg.cca_harmonics);
    if (j.contains("train")) {
      const auto& t = j.at("train");
      maybe_get(t, "learning_rate", cfg.train.learning_rate);
      maybe_get(t, "max_iterations", cfg.train.max_iterations);
      maybe_get(t, "convergence_tol", cfg.train.convergence_tol);
      maybe_get(t, "lambda", cfg.train.lambda);
      maybe_get(t, "standardize", cfg.train.feature_standardization);
    }
    if (j.contains("grid")) {
      for (const auto& [key, values] : j.at("grid").at("axes").items()) {
        GridAxis axis;
        axis.key = key;
        axis.values = values.get<std::vector<double>>();
        if (axis.values.empty()) {
          throw Error(ErrorCode::invalid_config, "grid axis '" + key + "' is empty");
        }
        cfg.grid.axes.push_back(std::move(axis));
      }
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::invalid_config, std::string("config: ") + e.what());
  }

  if (cfg.segment.length_s <= 0.0 || cfg.segment.overlap < 0.0 || cfg.segment.overlap >= 1.0) {
    throw Error(ErrorCode::invalid_config, "segment needs length > 0 and overlap in [0,1)");
  }
  if (cfg.train.learning_rate <= 0.0 || cfg.train.max_iterations == 0 ||
      cfg.train.convergence_tol <= 0.0 || cfg.train.lambda < 0.0) {
    throw Error(ErrorCode::invalid_config, "train settings out of range");
  }
  if (cfg.decision.t_required == 0 || cfg.decision.t_required > cfg.decision.window_t) {
    throw Error(ErrorCode::invalid_config, "decision rule needs 0 < t <= T");
  }
  return cfg;
}

SynthDatasetConfig synth_config_from_json_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::invalid_config, std::string("config JSON: ") + e.what());
  }

  SynthDatasetConfig cfg;
  try {
    maybe_get(j, "name", cfg.name);
    cfg.stimulus_frequencies_hz = j.at("stimulus_frequencies_hz").get<std::vector<double>>();
    maybe_get(j, "sampling_rate_hz", cfg.sampling_rate_hz);
    maybe_get(j, "n_channels", cfg.n_channels);
    if (j.contains("channel_names")) {
      cfg.channel_names = j.at("channel_names").get<std::vector<std::string>>();
    }
    maybe_get(j, "subjects", cfg.n_subjects);
    maybe_get(j, "repetitions", cfg.repetitions);
    maybe_get(j, "duration_s", cfg.duration_s);
    if (j.contains("profile") && !j.at("profile").is_null()) {
      cfg.profile = profile_from_json(j.at("profile"));
    }
    maybe_get(j, "harmonic_ratio", cfg.harmonic_ratio);
    maybe_get(j, "noise_exponent", cfg.noise_exponent);
    maybe_get(j, "snr_scale", cfg.snr_scale);
    maybe_get(j, "seed", cfg.seed);
    maybe_get(j, "output_dir", cfg.output_dir);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::invalid_config, std::string("synth config: ") + e.what());
  }
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path,
                                        const std::vector<std::string>& overrides) {
  ordered_json j = read_json_file(path);
  for (const auto& o : overrides) apply_override(j, o);
  return experiment_config_from_json_text(j.dump());
}

SynthDatasetConfig load_synth_config(const std::string& path,
                                     const std::vector<std::string>& overrides) {
  ordered_json j = read_json_file(path);
  for (const auto& o : overrides) apply_override(j, o);
  return synth_config_from_json_text(j.dump());
}

void apply_axis_value(ExperimentConfig& cfg, const std::string& key, double value) {
  if (key == "segment.length_s") cfg.segment.length_s = value;
  else if (key == "segment.overlap") cfg.segment.overlap = value;
  else if (key == "train.lambda") cfg.train.lambda = value;
  else if (key == "train.learning_rate") cfg.train.learning_rate = value;
  else if (key == "bifb.gamma") cfg.bifb.gamma = value;
  else if (key == "bifb.bw_scale") cfg.bifb.bw_scale = value;
  else if (key == "bifb.bw_base_hz") cfg.bifb.bw_base_hz = value;
  else if (key == "uf.half_width_hz") cfg.uf_half_width_hz = value;
  else if (key == "psda.half_width_hz") cfg.psda_half_width_hz = value;
  else if (key == "cca.n_harmonics") cfg.cca_harmonics = static_cast<std::size_t>(value);
  else if (key == "decision.t_required") cfg.decision.t_required = static_cast<std::size_t>(value);
  else if (key == "decision.window_t") cfg.decision.window_t = static_cast<std::size_t>(value);
  else {
    throw Error(ErrorCode::invalid_config, "unknown grid axis '" + key + "'");
  }
}

Dataset synthesize_dataset(const SynthDatasetConfig& cfg) {
  if (cfg.stimulus_frequencies_hz.size() < 2) {
    throw Error(ErrorCode::invalid_config, "need at least 2 stimulus frequencies");
  }
  if (cfg.n_subjects == 0 || cfg.repetitions == 0) {
    throw Error(ErrorCode::invalid_config, "need at least one subject and repetition");
  }
  const ResponseProfile profile =
      cfg.profile.control_points.empty() ? default_response_profile() : cfg.profile;

  Dataset ds;
  ds.manifest.name = cfg.name;
  ds.manifest.stimulus_frequencies_hz = cfg.stimulus_frequencies_hz;
  ds.manifest.sampling_rate_hz = cfg.sampling_rate_hz;

  char buf[64];
  for (std::size_t subj = 0; subj < cfg.n_subjects; ++subj) {
    std::snprintf(buf, sizeof(buf), "s%02zu", subj + 1);
    const std::string subject_id(buf);
    for (std::size_t si = 0; si < cfg.stimulus_frequencies_hz.size(); ++si) {
      for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
        SynthSpec spec;
        spec.stimulus_freq_hz = cfg.stimulus_frequencies_hz[si];
        spec.duration_s = cfg.duration_s;
        spec.sampling_rate_hz = cfg.sampling_rate_hz;
        spec.n_channels = cfg.n_channels;
        spec.profile = profile;
        spec.harmonic_ratio = cfg.harmonic_ratio;
        spec.noise_exponent = cfg.noise_exponent;
        spec.snr_scale = cfg.snr_scale;
        spec.rng_seed = derive_seed(cfg.seed, subj, si, rep);
        spec.channel_names = cfg.channel_names;
        spec.subject_id = subject_id;
        std::snprintf(buf, sizeof(buf), "%s_f%05.1f_r%02zu", subject_id.c_str(),
                      cfg.stimulus_frequencies_hz[si], rep + 1);
        spec.trial_id = buf;

        Recording rec = generate_trial(spec);
        TrialEntry entry;
        entry.trial_id = rec.trial_id;
        entry.subject_id = subject_id;
        entry.stimulus_freq_hz = rec.stimulus_freq_hz;
        entry.file = "trials/" + rec.trial_id + ".csv";
        ds.manifest.trials.push_back(entry);
        ds.recordings.push_back(std::move(rec));
      }
    }
  }
  if (ds.manifest.channel_names.empty()) {
    ds.manifest.channel_names = ds.recordings.front().channel_names;
  }
  validate_manifest(ds.manifest);
  return ds;
}

}  // namespace ssvep
