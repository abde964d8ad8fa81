#include "ssvepkit/filterbank.hpp"

#include <algorithm>
#include <cmath>

#include "ssvepkit/error.hpp"

namespace ssvep {

double tri_response(const TriFilter& filt, double f_hz) {
  const double lo = filt.center_hz - filt.bandwidth_hz / 2.0;
  const double hi = filt.center_hz + filt.bandwidth_hz / 2.0;
  if (f_hz >= lo && f_hz <= filt.center_hz) {
    return (f_hz - lo) / filt.bandwidth_hz * filt.gain;
  }
  if (f_hz > filt.center_hz && f_hz <= hi) {
    return (hi - f_hz) / filt.bandwidth_hz * filt.gain;
  }
  return 0.0;
}

double unit_response(const UnitFilter& filt, double f_hz) {
  return (f_hz >= filt.center_hz - filt.half_width_hz &&
          f_hz <= filt.center_hz + filt.half_width_hz)
             ? 1.0
             : 0.0;
}

double FilterBank::response(std::size_t index, double f_hz) const {
  return kind == FilterKind::triangular ? tri_response(tri[index], f_hz)
                                        : unit_response(unit[index], f_hz);
}

double FilterBank::support_low(std::size_t index) const {
  return kind == FilterKind::triangular
             ? tri[index].center_hz - tri[index].bandwidth_hz / 2.0
             : unit[index].center_hz - unit[index].half_width_hz;
}

double FilterBank::support_high(std::size_t index) const {
  return kind == FilterKind::triangular
             ? tri[index].center_hz + tri[index].bandwidth_hz / 2.0
             : unit[index].center_hz + unit[index].half_width_hz;
}

namespace {

void check_stimuli(const std::vector<double>& stimuli_hz) {
  if (stimuli_hz.size() < 2) {
    throw Error(ErrorCode::invalid_config, "need at least 2 stimulus frequencies");
  }
  for (std::size_t k = 0; k < stimuli_hz.size(); ++k) {
    if (stimuli_hz[k] <= 0.0) {
      throw Error(ErrorCode::non_positive_parameter, "stimulus frequencies must be positive");
    }
    if (k > 0 && stimuli_hz[k] <= stimuli_hz[k - 1]) {
      throw Error(ErrorCode::invalid_config,
                  "stimulus frequencies must be strictly increasing");
    }
  }
}

}  // namespace

FilterBank build_bifb(const std::vector<double>& stimuli_hz,
                      const std::vector<double>& gains,
                      const std::vector<double>& bandwidths_hz,
                      double sampling_rate_hz) {
  check_stimuli(stimuli_hz);
  const std::size_t k = stimuli_hz.size();
  if (gains.size() != 2 * k || bandwidths_hz.size() != 2 * k) {
    throw Error(ErrorCode::dimension_mismatch,
                "need 2K gains and 2K bandwidths for K stimuli");
  }
  const double nyquist = sampling_rate_hz / 2.0;

  FilterBank bank;
  bank.kind = FilterKind::triangular;
  bank.tri.resize(2 * k);
  for (std::size_t i = 0; i < 2 * k; ++i) {
    const double center = i < k ? stimuli_hz[i] : 2.0 * stimuli_hz[i - k];
    if (gains[i] <= 0.0 || bandwidths_hz[i] <= 0.0) {
      throw Error(ErrorCode::non_positive_parameter,
                  "filter gains and bandwidths must be positive");
    }
    const double lo = center - bandwidths_hz[i] / 2.0;
    const double hi = center + bandwidths_hz[i] / 2.0;
    if (lo <= 0.0) {
      throw Error(ErrorCode::non_positive_parameter,
                  "filter support must stay above 0 Hz");
    }
    if (hi >= nyquist) {
      throw Error(ErrorCode::nyquist_violation,
                  "filter at " + std::to_string(center) + " Hz reaches " +
                      std::to_string(hi) + " Hz, not below Nyquist " +
                      std::to_string(nyquist) + " Hz");
    }
    bank.tri[i] = TriFilter{center, bandwidths_hz[i], gains[i]};
  }
  return bank;
}

FilterBank build_unit_bank(const std::vector<double>& stimuli_hz,
                           double half_width_hz, double sampling_rate_hz) {
  check_stimuli(stimuli_hz);
  if (half_width_hz <= 0.0) {
    throw Error(ErrorCode::non_positive_parameter, "half width must be positive");
  }
  const std::size_t k = stimuli_hz.size();
  const double nyquist = sampling_rate_hz / 2.0;

  FilterBank bank;
  bank.kind = FilterKind::unit;
  bank.unit.resize(2 * k);
  for (std::size_t i = 0; i < 2 * k; ++i) {
    const double center = i < k ? stimuli_hz[i] : 2.0 * stimuli_hz[i - k];
    if (center + half_width_hz >= nyquist) {
      throw Error(ErrorCode::nyquist_violation,
                  "unit filter at " + std::to_string(center) +
                      " Hz reaches past Nyquist " + std::to_string(nyquist) + " Hz");
    }
    bank.unit[i] = UnitFilter{center, half_width_hz};
  }
  return bank;
}

BifbParams shaped_bifb_params(const std::vector<double>& stimuli_hz,
                              const ResponseProfile& profile,
                              const BifbShaping& shaping) {
  check_stimuli(stimuli_hz);
  if (shaping.bw_base_hz <= 0.0 || shaping.bw_scale <= 0.0) {
    throw Error(ErrorCode::non_positive_parameter, "bandwidth shaping must be positive");
  }
  const std::size_t k = stimuli_hz.size();

  // Inverse-response shaping: weak bands get larger gain and bandwidth.
  // Gains follow (1/amplitude)^gamma; bandwidths follow 1/amplitude scaled
  // by bw_scale. Both are normalized so the strongest band sits at the
  // gain floor 1 and bandwidth floor bw_base_hz.
  std::vector<double> inv_amp(k);
  double inv_min = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    inv_amp[i] = 1.0 / profile_amplitude(profile, stimuli_hz[i]);
    inv_min = i == 0 ? inv_amp[i] : std::min(inv_min, inv_amp[i]);
  }

  BifbParams params;
  params.gains.resize(2 * k);
  params.bandwidths_hz.resize(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    const double gain = std::pow(inv_amp[i] / inv_min, shaping.gamma);
    const double bw = shaping.bw_scale * shaping.bw_base_hz * inv_amp[i] / inv_min;
    params.gains[i] = gain;
    params.gains[k + i] = gain;
    params.bandwidths_hz[i] = bw;
    params.bandwidths_hz[k + i] = bw;
  }
  return params;
}

FeatureVector extract_features(const Spectrum& spec, const FilterBank& bank) {
  const double f_max = spec.max_frequency_hz();
  for (std::size_t i = 0; i < bank.size(); ++i) {
    if (bank.support_low(i) < 0.0 || bank.support_high(i) > f_max) {
      throw Error(ErrorCode::bank_exceeds_spectrum_range,
                  "filter " + std::to_string(i) + " support [" +
                      std::to_string(bank.support_low(i)) + ", " +
                      std::to_string(bank.support_high(i)) +
                      "] Hz exceeds spectrum range [0, " + std::to_string(f_max) + "] Hz");
    }
  }

  FeatureVector fv;
  fv.x.resize(bank.size(), 0.0);
  for (std::size_t i = 0; i < bank.size(); ++i) {
    // Only bins inside the filter support contribute; the range is padded by
    // an epsilon so edge bins are never lost to rounding, response() decides.
    const auto b_lo = static_cast<std::size_t>(
        std::max(0.0, std::ceil(bank.support_low(i) / spec.bin_resolution_hz - 1e-9)));
    const auto b_hi = static_cast<std::size_t>(
        std::min(static_cast<double>(spec.power.size() - 1),
                 std::floor(bank.support_high(i) / spec.bin_resolution_hz + 1e-9)));
    double acc = 0.0;
    for (std::size_t b = b_lo; b <= b_hi; ++b) {
      acc += spec.power[b] * bank.response(i, static_cast<double>(b) * spec.bin_resolution_hz);
    }
    fv.x[i] = acc;
  }
  return fv;
}

std::vector<std::string> bank_overlap_warnings(const FilterBank& bank,
                                               const std::vector<double>& stimuli_hz) {
  std::vector<std::string> warnings;
  const std::size_t k = stimuli_hz.size();
  for (std::size_t i = 0; i < k && i < bank.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      if (stimuli_hz[j] > bank.support_low(i) && stimuli_hz[j] < bank.support_high(i)) {
        warnings.push_back("fundamental filter at " + std::to_string(stimuli_hz[i]) +
                           " Hz covers neighboring stimulus " +
                           std::to_string(stimuli_hz[j]) + " Hz");
      }
    }
  }
  return warnings;
}

}  // namespace ssvep
