#pragma once

#include <cstddef>
#include <vector>

namespace ssvep {

struct Segment {
  std::vector<double> samples;
  double start_time_s{0.0};
  double sampling_rate_hz{0.0};

  std::size_t size() const { return samples.size(); }
  double end_time_s() const {
    return start_time_s + static_cast<double>(samples.size()) / sampling_rate_hz;
  }
};

// One-sided power spectral density on the DFT bin grid.
// power[b] corresponds to frequency b * bin_resolution_hz.
struct Spectrum {
  std::vector<double> power;
  double bin_resolution_hz{0.0};
  std::size_t n_fft{0};      // length of the transform (zero-padded)
  std::size_t n_samples{0};  // original segment length N (normalization)

  double max_frequency_hz() const {
    return power.empty() ? 0.0
                         : bin_resolution_hz * static_cast<double>(power.size() - 1);
  }
};

// w[n] = 0.54 - 0.46 cos(2 pi n / (N-1)), n = 0..N-1 (symmetric form).
std::vector<double> hamming_window(std::size_t n);

// Segment start offsets in samples for a signal of n_samples, segment length
// seg_len samples and the given hop. The trailing partial segment is dropped.
std::vector<std::size_t> segment_starts(std::size_t n_samples, std::size_t seg_len,
                                        std::size_t hop);

std::size_t hop_samples(std::size_t seg_len, double overlap_fraction);

// Overlapped segmentation of one channel. overlap_fraction in [0,1).
// Throws SignalTooShort if the signal is shorter than one segment.
std::vector<Segment> segment_stream(const std::vector<double>& signal,
                                    double sampling_rate_hz, double seg_len_s,
                                    double overlap_fraction);

// Periodogram S[f] = (1/N) |sum_n x[n] w[n] e^{-j 2 pi f n / N}|^2 on the
// one-sided DFT bin grid, with w the Hamming window of the segment length.
// zero_pad_factor > 1 evaluates the same sum on a finer bin grid.
Spectrum psd(const Segment& seg, std::size_t zero_pad_factor = 1);

// Same with an explicit window (window.size() must equal seg.size()).
Spectrum psd_windowed(const Segment& seg, const std::vector<double>& window,
                      std::size_t zero_pad_factor = 1);

}  // namespace ssvep
