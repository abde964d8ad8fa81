#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <vector>

#include "ssvepkit/dsp.hpp"
#include "ssvepkit/error.hpp"
#include "ssvepkit/synth.hpp"

using namespace ssvep;

namespace {

SynthSpec base_spec() {
  SynthSpec spec;
  spec.stimulus_freq_hz = 8.0;
  spec.duration_s = 8.0;
  spec.sampling_rate_hz = 256.0;
  spec.n_channels = 1;
  spec.profile = default_response_profile();
  spec.harmonic_ratio = 0.5;
  spec.noise_exponent = 1.0;
  spec.snr_scale = 1.0;
  spec.rng_seed = 7;
  return spec;
}

Spectrum trial_psd(const Recording& rec) {
  Segment seg;
  seg.samples = rec.samples[0];
  seg.sampling_rate_hz = rec.sampling_rate_hz;
  return psd(seg);
}

std::size_t argmax_in_band(const Spectrum& spec, double lo_hz, double hi_hz) {
  const auto b_lo = static_cast<std::size_t>(std::ceil(lo_hz / spec.bin_resolution_hz));
  const auto b_hi = static_cast<std::size_t>(std::floor(hi_hz / spec.bin_resolution_hz));
  std::size_t best = b_lo;
  for (std::size_t b = b_lo; b <= b_hi; ++b) {
    if (spec.power[b] > spec.power[best]) best = b;
  }
  return best;
}

}  // namespace

TEST_CASE("identical spec and seed give bit-identical recordings") {
  const SynthSpec spec = base_spec();
  const Recording a = generate_trial(spec);
  const Recording b = generate_trial(spec);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t ch = 0; ch < a.samples.size(); ++ch) {
    CHECK(std::memcmp(a.samples[ch].data(), b.samples[ch].data(),
                      a.samples[ch].size() * sizeof(double)) == 0);
  }
  SynthSpec other = spec;
  other.rng_seed = 8;
  const Recording c = generate_trial(other);
  CHECK(std::memcmp(a.samples[0].data(), c.samples[0].data(),
                    a.samples[0].size() * sizeof(double)) != 0);
}

TEST_CASE("snr_scale 0 leaves no peak at the stimulus bin") {
  SynthSpec spec = base_spec();
  spec.snr_scale = 0.0;
  // snr 0 is allowed as the degenerate no-signal case.
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
    spec.rng_seed = seed;
    const Recording rec = generate_trial(spec);
    const Spectrum spec_psd = trial_psd(rec);
    const auto bin = static_cast<std::size_t>(
        std::llround(spec.stimulus_freq_hz / spec_psd.bin_resolution_hz));
    // Median of the surrounding +-16 bins, excluding the bin itself.
    std::vector<double> neighbors;
    for (std::size_t b = bin - 16; b <= bin + 16; ++b) {
      if (b != bin) neighbors.push_back(spec_psd.power[b]);
    }
    std::nth_element(neighbors.begin(), neighbors.begin() + neighbors.size() / 2,
                     neighbors.end());
    const double median = neighbors[neighbors.size() / 2];
    CHECK(spec_psd.power[bin] < 3.0 * median);
  }
}

TEST_CASE("snr_scale 1 puts the 6-35 Hz periodogram argmax at the stimulus bin") {
  SynthSpec spec = base_spec();
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    spec.rng_seed = seed;
    const Recording rec = generate_trial(spec);
    const Spectrum spec_psd = trial_psd(rec);
    const auto best = argmax_in_band(spec_psd, 6.0, 35.0);
    const auto target = static_cast<std::size_t>(
        std::llround(spec.stimulus_freq_hz / spec_psd.bin_resolution_hz));
    if (best == target) ++hits;
  }
  CHECK(hits >= 95);
}

TEST_CASE("profile interpolation endpoints and midpoints") {
  const ResponseProfile profile{{{6.0, 1.0}, {10.0, 0.8}, {20.0, 0.4}}};
  CHECK(profile_amplitude(profile, 10.0) == 0.8);
  CHECK(profile_amplitude(profile, 8.0) == doctest::Approx(0.9));
  CHECK(profile_amplitude(profile, 15.0) == doctest::Approx(0.6));
  CHECK_THROWS_WITH_AS(profile_amplitude(profile, 5.0),
                       doctest::Contains("OutOfProfileRange"), Error);
  CHECK_THROWS_WITH_AS(profile_amplitude(profile, 21.0),
                       doctest::Contains("OutOfProfileRange"), Error);
}

TEST_CASE("default profile keeps the high band below half the low band") {
  const ResponseProfile profile = default_response_profile();
  CHECK(profile_amplitude(profile, 28.0) / profile_amplitude(profile, 8.0) < 0.5);
  CHECK_NOTHROW(validate_profile(profile));
}

TEST_CASE("profile validation rejects inverted high/low amplitudes") {
  ResponseProfile bad{{{6.0, 0.2}, {30.0, 1.0}}};
  CHECK_THROWS_AS(validate_profile(bad), Error);
  ResponseProfile nonpos{{{6.0, 1.0}, {30.0, 0.0}}};
  CHECK_THROWS_AS(validate_profile(nonpos), Error);
  ResponseProfile unsorted{{{6.0, 1.0}, {6.0, 0.5}}};
  CHECK_THROWS_AS(validate_profile(unsorted), Error);
}

TEST_CASE("nyquist violation for stimuli whose harmonic exceeds the band") {
  SynthSpec spec = base_spec();
  spec.sampling_rate_hz = 100.0;
  spec.stimulus_freq_hz = 28.0;  // 2*28 = 56 >= 50
  CHECK_THROWS_WITH_AS(generate_trial(spec), doctest::Contains("NyquistViolation"),
                       Error);
}

TEST_CASE("background-only PSD follows the configured 1/f slope") {
  SynthSpec spec = base_spec();
  spec.snr_scale = 0.0;

  for (double exponent : {1.0, 1.5}) {
    spec.noise_exponent = exponent;
    std::vector<double> mean_power;
    std::vector<double> freqs;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      spec.rng_seed = seed;
      const Spectrum s = trial_psd(generate_trial(spec));
      const auto b_lo = static_cast<std::size_t>(std::ceil(6.0 / s.bin_resolution_hz));
      const auto b_hi = static_cast<std::size_t>(std::floor(35.0 / s.bin_resolution_hz));
      if (mean_power.empty()) {
        mean_power.assign(b_hi - b_lo + 1, 0.0);
        for (std::size_t b = b_lo; b <= b_hi; ++b) {
          freqs.push_back(static_cast<double>(b) * s.bin_resolution_hz);
        }
      }
      for (std::size_t b = b_lo; b <= b_hi; ++b) mean_power[b - b_lo] += s.power[b];
    }
    // Log-log least squares slope.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(freqs.size());
    for (std::size_t i = 0; i < freqs.size(); ++i) {
      const double x = std::log10(freqs[i]);
      const double y = std::log10(mean_power[i] / 25.0);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CHECK(slope == doctest::Approx(-exponent).epsilon(0.3));
  }
}

TEST_CASE("second harmonic bin power tracks harmonic_ratio squared") {
  SynthSpec spec = base_spec();
  spec.snr_scale = 10.0;
  spec.harmonic_ratio = 0.5;

  double ratio_sum = 0.0;
  const int n_seeds = 10;
  for (std::uint64_t seed = 0; seed < n_seeds; ++seed) {
    spec.rng_seed = seed;
    const Spectrum s = trial_psd(generate_trial(spec));
    const auto b1 = static_cast<std::size_t>(
        std::llround(spec.stimulus_freq_hz / s.bin_resolution_hz));
    const auto b2 = 2 * b1;
    ratio_sum += s.power[b2] / s.power[b1];
  }
  const double mean_ratio = ratio_sum / n_seeds;
  CHECK(mean_ratio == doctest::Approx(0.25).epsilon(0.2));
}

TEST_CASE("channel naming and shared-signal structure") {
  SynthSpec spec = base_spec();
  spec.n_channels = 3;
  const Recording rec = generate_trial(spec);
  CHECK(rec.channel_names == std::vector<std::string>{"Oz", "O1", "O2"});
  CHECK(rec.n_samples() == 2048);
  CHECK(rec.duration_s() == doctest::Approx(8.0));
  CHECK(rec.stimulus_freq_hz == 8.0);
}
