#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ssvepkit/recording.hpp"

namespace ssvep {

// Evoked response amplitude at the fundamental as a function of stimulus
// frequency, piecewise-linear between control points.
struct ResponseProfile {
  std::vector<std::pair<double, double>> control_points;  // (frequency_hz, amplitude)

  double min_frequency_hz() const { return control_points.front().first; }
  double max_frequency_hz() const { return control_points.back().first; }
};

// Monotone-decaying default: strong response at 6-8 Hz, weak at 28-35 Hz.
ResponseProfile default_response_profile();

// Checks control-point ordering and positivity.
void validate_profile(const ResponseProfile& profile);

// Piecewise-linear interpolation; throws OutOfProfileRange outside the
// control-point range.
double profile_amplitude(const ResponseProfile& profile, double f_hz);

struct SynthSpec {
  double stimulus_freq_hz{8.0};
  double duration_s{8.0};
  double sampling_rate_hz{256.0};
  std::size_t n_channels{1};
  ResponseProfile profile;
  double harmonic_ratio{0.5};   // second-harmonic amplitude relative to fundamental
  double noise_exponent{1.0};   // background PSD ~ 1/f^exponent
  double snr_scale{1.0};        // fundamental amplitude = profile(f0) * snr_scale
  std::uint64_t rng_seed{0};
  std::vector<std::string> channel_names;  // defaults to Oz, O1, O2, ...
  std::string subject_id{"s00"};
  std::string trial_id{"trial"};
};

// Background 1/f^a noise plus sinusoids at the stimulus frequency and its
// second harmonic, identical evoked signal on every channel, independent
// noise per channel. Deterministic in rng_seed.
Recording generate_trial(const SynthSpec& spec);

// splitmix64 stream with Box-Muller gaussians; fully specified here so that
// generated datasets reproduce bit-exactly across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller (one value per call, pair cached).
  double next_gaussian();

 private:
  std::uint64_t state_;
  bool have_spare_{false};
  double spare_{0.0};
};

// Stable per-trial seed derived from a dataset master seed and trial indices.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t subject,
                          std::uint64_t stimulus, std::uint64_t repetition);

}  // namespace ssvep
