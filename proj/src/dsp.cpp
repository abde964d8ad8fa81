#include "ssvepkit/dsp.hpp"

#include <cmath>

#include "ssvepkit/error.hpp"
#include "ssvepkit/fft.hpp"

namespace ssvep {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

std::vector<double> hamming_window(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::non_positive_parameter, "window length must be >= 2");
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = 0.54 - 0.46 * std::cos(2.0 * kPi * static_cast<double>(i) /
                                  static_cast<double>(n - 1));
  }
  return w;
}

std::size_t hop_samples(std::size_t seg_len, double overlap_fraction) {
  if (overlap_fraction < 0.0 || overlap_fraction >= 1.0) {
    throw Error(ErrorCode::invalid_config, "overlap fraction must lie in [0,1)");
  }
  const double hop = static_cast<double>(seg_len) * (1.0 - overlap_fraction);
  const auto h = static_cast<std::size_t>(std::llround(hop));
  return h == 0 ? 1 : h;
}

std::vector<std::size_t> segment_starts(std::size_t n_samples, std::size_t seg_len,
                                        std::size_t hop) {
  std::vector<std::size_t> starts;
  for (std::size_t s = 0; s + seg_len <= n_samples; s += hop) starts.push_back(s);
  return starts;
}

std::vector<Segment> segment_stream(const std::vector<double>& signal,
                                    double sampling_rate_hz, double seg_len_s,
                                    double overlap_fraction) {
  const auto seg_len =
      static_cast<std::size_t>(std::llround(seg_len_s * sampling_rate_hz));
  if (seg_len < 8) {
    throw Error(ErrorCode::non_positive_parameter, "segment length must be >= 8 samples");
  }
  if (signal.size() < seg_len) {
    throw Error(ErrorCode::signal_too_short,
                "signal shorter than one segment (" + std::to_string(signal.size()) +
                    " < " + std::to_string(seg_len) + " samples)");
  }
  const std::size_t hop = hop_samples(seg_len, overlap_fraction);
  std::vector<Segment> segments;
  for (std::size_t s : segment_starts(signal.size(), seg_len, hop)) {
    Segment seg;
    seg.samples.assign(signal.begin() + static_cast<std::ptrdiff_t>(s),
                       signal.begin() + static_cast<std::ptrdiff_t>(s + seg_len));
    seg.start_time_s = static_cast<double>(s) / sampling_rate_hz;
    seg.sampling_rate_hz = sampling_rate_hz;
    segments.push_back(std::move(seg));
  }
  return segments;
}

Spectrum psd_windowed(const Segment& seg, const std::vector<double>& window,
                      std::size_t zero_pad_factor) {
  const std::size_t n = seg.samples.size();
  if (window.size() != n) {
    throw Error(ErrorCode::dimension_mismatch, "window length does not match segment");
  }
  if (zero_pad_factor == 0) zero_pad_factor = 1;
  const std::size_t n_fft = n * zero_pad_factor;

  std::vector<cdouble> buf(n_fft, cdouble(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) buf[i] = cdouble(seg.samples[i] * window[i], 0.0);
  fft(buf);

  Spectrum spec;
  spec.n_fft = n_fft;
  spec.n_samples = n;
  spec.bin_resolution_hz = seg.sampling_rate_hz / static_cast<double>(n_fft);
  spec.power.resize(n_fft / 2 + 1);
  const double norm = 1.0 / static_cast<double>(n);
  for (std::size_t b = 0; b < spec.power.size(); ++b) {
    spec.power[b] = std::norm(buf[b]) * norm;
  }
  return spec;
}

Spectrum psd(const Segment& seg, std::size_t zero_pad_factor) {
  return psd_windowed(seg, hamming_window(seg.samples.size()), zero_pad_factor);
}

}  // namespace ssvep
