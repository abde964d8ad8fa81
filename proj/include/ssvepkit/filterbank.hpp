#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "ssvepkit/dsp.hpp"
#include "ssvepkit/synth.hpp"

namespace ssvep {

// Triangular filter: linear rise over [center - bw/2, center], linear fall
// over [center, center + bw/2], zero outside. Peak response is gain/2.
struct TriFilter {
  double center_hz{0.0};
  double bandwidth_hz{0.0};
  double gain{1.0};
};

// Rectangular indicator of the closed interval [center - hw, center + hw].
struct UnitFilter {
  double center_hz{0.0};
  double half_width_hz{0.0};
};

enum class FilterKind { triangular, unit };

// Ordered bank of 2K filters: indices 0..K-1 at the stimulus fundamentals,
// K..2K-1 at the second harmonics (filter K+k centered at twice filter k).
struct FilterBank {
  FilterKind kind{FilterKind::triangular};
  std::vector<TriFilter> tri;
  std::vector<UnitFilter> unit;

  std::size_t size() const {
    return kind == FilterKind::triangular ? tri.size() : unit.size();
  }
  std::size_t n_classes() const { return size() / 2; }
  double response(std::size_t index, double f_hz) const;
  double support_low(std::size_t index) const;
  double support_high(std::size_t index) const;
};

struct FeatureVector {
  std::vector<double> x;
  std::string trial_id;
  double segment_start_s{0.0};
};

double tri_response(const TriFilter& filt, double f_hz);
double unit_response(const UnitFilter& filt, double f_hz);

// Bank of 2K triangular filters from K stimulus frequencies and per-filter
// gains/bandwidths (2K each, fundamentals first). Supports must stay strictly
// below Nyquist and above 0 Hz.
FilterBank build_bifb(const std::vector<double>& stimuli_hz,
                      const std::vector<double>& gains,
                      const std::vector<double>& bandwidths_hz,
                      double sampling_rate_hz);

// Bank of 2K unit filters with a common half width.
FilterBank build_unit_bank(const std::vector<double>& stimuli_hz,
                           double half_width_hz, double sampling_rate_hz);

// Profile-shaped default parameters: gains (1/profile(f_k))^gamma normalized
// to min 1, bandwidths bw_scale * bw_base_hz * shaped the same way. Harmonic
// filters reuse their fundamental's values.
struct BifbShaping {
  double gamma{1.0};
  double bw_base_hz{1.0};
  double bw_scale{1.0};
};

struct BifbParams {
  std::vector<double> gains;          // 2K
  std::vector<double> bandwidths_hz;  // 2K
};

BifbParams shaped_bifb_params(const std::vector<double>& stimuli_hz,
                              const ResponseProfile& profile,
                              const BifbShaping& shaping);

// x_i = sum over DFT bins of S[f] * H_i(f). Throws if a filter's support
// extends past the spectrum's frequency range.
FeatureVector extract_features(const Spectrum& spec, const FilterBank& bank);

// Warnings for fundamental filters whose support contains a neighboring
// stimulus frequency (overlap is allowed, just reported).
std::vector<std::string> bank_overlap_warnings(const FilterBank& bank,
                                               const std::vector<double>& stimuli_hz);

}  // namespace ssvep
