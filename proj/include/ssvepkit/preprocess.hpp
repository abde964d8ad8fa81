#pragma once

#include <optional>
#include <string>

#include "ssvepkit/recording.hpp"

namespace ssvep {

struct PreprocessConfig {
  std::optional<std::string> reference_channel;  // subtract this channel everywhere
  std::optional<double> bandpass_low_hz;
  std::optional<double> bandpass_high_hz;
  std::optional<double> notch_hz;
  double notch_q{30.0};
  int bandpass_order{4};
  std::string analysis_channel{"Oz"};
};

// Re-referencing, optional notch, optional zero-phase band-pass. The input
// recording is left untouched.
Recording preprocess(const Recording& rec, const PreprocessConfig& cfg);

}  // namespace ssvep
