#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ssvep {

// One trial of multichannel EEG, samples in microvolts, samples[ch][t].
struct Recording {
  std::vector<std::vector<double>> samples;
  double sampling_rate_hz{0.0};
  std::vector<std::string> channel_names;
  double stimulus_freq_hz{0.0};
  std::string subject_id;
  std::string trial_id;

  std::size_t n_channels() const { return samples.size(); }
  std::size_t n_samples() const { return samples.empty() ? 0 : samples[0].size(); }
  double duration_s() const {
    return sampling_rate_hz > 0.0 ? static_cast<double>(n_samples()) / sampling_rate_hz
                                  : 0.0;
  }

  // Index of a channel by name; throws UnknownChannel.
  std::size_t channel_index(const std::string& name) const;
  const std::vector<double>& channel(const std::string& name) const;
};

// Enforces the Recording invariants (consistent row lengths, positive label
// and sampling rate, second harmonic below Nyquist, finite samples).
void validate_recording(const Recording& rec);

}  // namespace ssvep
