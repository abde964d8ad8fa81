#include "ssvepkit/synth.hpp"

#include <cmath>
#include <string>

#include "ssvepkit/error.hpp"
#include "ssvepkit/fft.hpp"

namespace ssvep {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

std::vector<std::string> default_channel_names(std::size_t n) {
  static const char* occipital[] = {"Oz", "O1", "O2", "POz", "PO3", "PO4", "Pz", "P3"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < 8) {
      names.emplace_back(occipital[i]);
    } else {
      names.push_back("ch" + std::to_string(i));
    }
  }
  return names;
}
}  // namespace

double Rng::next_gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller; u clamped away from 0 so log stays finite.
  double u = next_double();
  if (u < 1e-300) u = 1e-300;
  const double v = next_double();
  const double r = std::sqrt(-2.0 * std::log(u));
  const double ang = 2.0 * kPi * v;
  spare_ = r * std::sin(ang);
  have_spare_ = true;
  return r * std::cos(ang);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t subject,
                          std::uint64_t stimulus, std::uint64_t repetition) {
  Rng mix(master ^ (subject * 0x100000001b3ULL) ^ (stimulus * 0x1000193ULL) ^
          (repetition * 0x10001ULL));
  mix.next_u64();
  return mix.next_u64();
}

ResponseProfile default_response_profile() {
  return ResponseProfile{{{6.0, 1.0},
                          {8.0, 1.0},
                          {10.0, 0.9},
                          {14.0, 0.7},
                          {20.0, 0.5},
                          {28.0, 0.3},
                          {35.0, 0.2}}};
}

void validate_profile(const ResponseProfile& profile) {
  if (profile.control_points.size() < 2) {
    throw Error(ErrorCode::invalid_config, "profile needs at least 2 control points");
  }
  for (std::size_t i = 0; i < profile.control_points.size(); ++i) {
    if (profile.control_points[i].second <= 0.0) {
      throw Error(ErrorCode::non_positive_parameter, "profile amplitudes must be positive");
    }
    if (i > 0 && profile.control_points[i].first <= profile.control_points[i - 1].first) {
      throw Error(ErrorCode::invalid_config,
                  "profile frequencies must be strictly increasing");
    }
  }
  // High band must be weaker than low band when both are covered.
  if (profile.min_frequency_hz() <= 8.0 && profile.max_frequency_hz() >= 28.0) {
    if (profile_amplitude(profile, 28.0) >= profile_amplitude(profile, 8.0)) {
      throw Error(ErrorCode::invalid_config,
                  "profile amplitude at 28 Hz must be below the amplitude at 8 Hz");
    }
  }
}

double profile_amplitude(const ResponseProfile& profile, double f_hz) {
  const auto& cp = profile.control_points;
  if (cp.size() < 2) {
    throw Error(ErrorCode::invalid_config, "profile needs at least 2 control points");
  }
  if (f_hz < cp.front().first || f_hz > cp.back().first) {
    throw Error(ErrorCode::out_of_profile_range,
                "frequency " + std::to_string(f_hz) + " Hz outside profile range [" +
                    std::to_string(cp.front().first) + ", " +
                    std::to_string(cp.back().first) + "]");
  }
  for (std::size_t i = 1; i < cp.size(); ++i) {
    if (f_hz <= cp[i].first) {
      const double f0 = cp[i - 1].first, f1 = cp[i].first;
      const double a0 = cp[i - 1].second, a1 = cp[i].second;
      const double t = (f_hz - f0) / (f1 - f0);
      return a0 + t * (a1 - a0);
    }
  }
  return cp.back().second;
}

Recording generate_trial(const SynthSpec& spec) {
  const double nyquist = spec.sampling_rate_hz / 2.0;
  if (2.0 * spec.stimulus_freq_hz >= nyquist) {
    throw Error(ErrorCode::nyquist_violation,
                "second harmonic of " + std::to_string(spec.stimulus_freq_hz) +
                    " Hz is not below Nyquist " + std::to_string(nyquist) + " Hz");
  }
  if (spec.harmonic_ratio <= 0.0 || spec.harmonic_ratio > 1.0) {
    throw Error(ErrorCode::invalid_config, "harmonic_ratio must lie in (0,1]");
  }
  if (spec.n_channels == 0 || spec.duration_s <= 0.0) {
    throw Error(ErrorCode::invalid_config, "need at least one channel and positive duration");
  }
  validate_profile(spec.profile);

  const auto n = static_cast<std::size_t>(std::llround(spec.duration_s * spec.sampling_rate_hz));
  if (n < 2) throw Error(ErrorCode::invalid_config, "trial too short");

  Recording rec;
  rec.sampling_rate_hz = spec.sampling_rate_hz;
  rec.stimulus_freq_hz = spec.stimulus_freq_hz;
  rec.subject_id = spec.subject_id;
  rec.trial_id = spec.trial_id;
  rec.channel_names = spec.channel_names.empty() ? default_channel_names(spec.n_channels)
                                                 : spec.channel_names;
  if (rec.channel_names.size() != spec.n_channels) {
    throw Error(ErrorCode::channel_mismatch, "channel_names length must match n_channels");
  }

  Rng rng(spec.rng_seed);

  // Shared evoked response: fundamental plus second harmonic, random phase.
  const double amp1 = profile_amplitude(spec.profile, spec.stimulus_freq_hz) * spec.snr_scale;
  const double amp2 = spec.harmonic_ratio * amp1;
  const double phase1 = 2.0 * kPi * rng.next_double();
  const double phase2 = 2.0 * kPi * rng.next_double();
  std::vector<double> evoked(n);
  for (std::size_t t = 0; t < n; ++t) {
    const double ts = static_cast<double>(t) / spec.sampling_rate_hz;
    evoked[t] = amp1 * std::cos(2.0 * kPi * spec.stimulus_freq_hz * ts + phase1) +
                amp2 * std::cos(2.0 * kPi * 2.0 * spec.stimulus_freq_hz * ts + phase2);
  }

  // Frequency-shaped gaussian background: spectral amplitude ~ f^(-a/2),
  // normalized so the expected time-domain RMS is 1 before snr scaling.
  const std::size_t n_half = n / 2;
  std::vector<double> shape(n_half + 1, 0.0);
  double power_sum = 0.0;
  for (std::size_t b = 1; b <= n_half; ++b) {
    const double f = static_cast<double>(b) * spec.sampling_rate_hz / static_cast<double>(n);
    shape[b] = std::pow(f, -spec.noise_exponent / 2.0);
    const bool unique_bin = (b == n_half && n % 2 == 0);
    power_sum += shape[b] * shape[b] * (unique_bin ? 1.0 : 2.0);
  }
  const double norm = power_sum > 0.0 ? 1.0 / std::sqrt(power_sum) : 0.0;

  rec.samples.resize(spec.n_channels);
  std::vector<cdouble> buf(n);
  for (std::size_t ch = 0; ch < spec.n_channels; ++ch) {
    for (auto& x : buf) x = cdouble(0.0, 0.0);
    for (std::size_t b = 1; b <= n_half; ++b) {
      const double s = shape[b] * norm * static_cast<double>(n) / std::sqrt(2.0);
      cdouble c;
      if (b == n_half && n % 2 == 0) {
        c = cdouble(s * rng.next_gaussian() * std::sqrt(2.0), 0.0);
      } else {
        c = cdouble(s * rng.next_gaussian(), s * rng.next_gaussian());
      }
      buf[b] = c;
      buf[n - b] = std::conj(c);
    }
    ifft(buf);
    auto& chan = rec.samples[ch];
    chan.resize(n);
    for (std::size_t t = 0; t < n; ++t) chan[t] = buf[t].real() + evoked[t];
  }
  return rec;
}

}  // namespace ssvep
