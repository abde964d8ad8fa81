#include "ssvepkit/preprocess.hpp"

#include "ssvepkit/error.hpp"
#include "ssvepkit/iir.hpp"

namespace ssvep {

Recording preprocess(const Recording& rec, const PreprocessConfig& cfg) {
  const double nyquist = rec.sampling_rate_hz / 2.0;
  if (cfg.bandpass_low_hz.has_value() != cfg.bandpass_high_hz.has_value()) {
    throw Error(ErrorCode::invalid_config, "band-pass needs both edges");
  }
  if (cfg.bandpass_low_hz) {
    if (*cfg.bandpass_low_hz <= 0.0 || *cfg.bandpass_low_hz >= *cfg.bandpass_high_hz ||
        *cfg.bandpass_high_hz >= nyquist) {
      throw Error(ErrorCode::band_edges_above_nyquist,
                  "band edges must satisfy 0 < low < high < Nyquist");
    }
  }
  if (cfg.notch_hz && (*cfg.notch_hz <= 0.0 || *cfg.notch_hz >= nyquist)) {
    throw Error(ErrorCode::band_edges_above_nyquist, "notch must be below Nyquist");
  }

  Recording out = rec;

  if (cfg.reference_channel) {
    const std::size_t ref = out.channel_index(*cfg.reference_channel);
    const std::vector<double> ref_signal = out.samples[ref];  // copy, ref zeroes itself
    for (auto& chan : out.samples) {
      for (std::size_t t = 0; t < chan.size(); ++t) chan[t] -= ref_signal[t];
    }
  }

  SosChain chain;
  if (cfg.notch_hz) {
    chain.push_back(notch_biquad(*cfg.notch_hz, cfg.notch_q, rec.sampling_rate_hz));
  }
  if (cfg.bandpass_low_hz) {
    const SosChain bp = butter_bandpass(cfg.bandpass_order, *cfg.bandpass_low_hz,
                                        *cfg.bandpass_high_hz, rec.sampling_rate_hz);
    chain.insert(chain.end(), bp.begin(), bp.end());
  }
  if (!chain.empty()) {
    for (auto& chan : out.samples) chan = sosfiltfilt(chain, chan);
  }
  return out;
}

}  // namespace ssvep
