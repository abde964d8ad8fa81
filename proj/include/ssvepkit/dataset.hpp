#pragma once

#include <string>
#include <vector>

#include "ssvepkit/recording.hpp"

namespace ssvep {

struct TrialEntry {
  std::string trial_id;
  std::string subject_id;
  double stimulus_freq_hz{0.0};
  std::string file;  // trial CSV, relative to the manifest
};

struct DatasetManifest {
  std::string name;
  std::vector<double> stimulus_frequencies_hz;  // strictly increasing, K >= 2
  double sampling_rate_hz{0.0};
  std::vector<std::string> channel_names;
  std::vector<TrialEntry> trials;

  std::size_t n_classes() const { return stimulus_frequencies_hz.size(); }
  // Index into stimulus_frequencies_hz, -1 when absent.
  int class_index(double stimulus_freq_hz) const;
};

struct Dataset {
  DatasetManifest manifest;
  std::vector<Recording> recordings;  // same order as manifest.trials

  std::vector<std::string> subject_ids() const;
  std::vector<std::size_t> subject_trials(const std::string& subject_id) const;
};

void validate_manifest(const DatasetManifest& manifest);

// JSON manifest plus one CSV per trial (header row of channel names, one row
// per sample, fixed decimal notation). Frequencies in Hz, samples in
// microvolts. Sample values round-trip bit-exactly.
Dataset load_dataset(const std::string& manifest_path);
void save_dataset(const Dataset& ds, const std::string& manifest_path);

}  // namespace ssvep
