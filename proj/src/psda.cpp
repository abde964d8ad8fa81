#include "ssvepkit/psda.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ssvepkit/error.hpp"

namespace ssvep {

namespace {

double band_energy(const Spectrum& spec, double center_hz, double half_width_hz) {
  const double lo = center_hz - half_width_hz;
  const double hi = center_hz + half_width_hz;
  const double f_max = spec.max_frequency_hz();
  if (lo < 0.0 || hi > f_max) {
    throw Error(ErrorCode::band_exceeds_spectrum_range,
                "band [" + std::to_string(lo) + ", " + std::to_string(hi) +
                    "] Hz exceeds spectrum range [0, " + std::to_string(f_max) + "] Hz");
  }
  const auto b_lo = static_cast<std::size_t>(
      std::max(0.0, std::ceil(lo / spec.bin_resolution_hz - 1e-9)));
  const auto b_hi = static_cast<std::size_t>(
      std::min(static_cast<double>(spec.power.size() - 1),
               std::floor(hi / spec.bin_resolution_hz + 1e-9)));
  double acc = 0.0;
  for (std::size_t b = b_lo; b <= b_hi; ++b) {
    const double f = static_cast<double>(b) * spec.bin_resolution_hz;
    if (f >= lo && f <= hi) acc += spec.power[b];  // closed interval
  }
  return acc;
}

}  // namespace

std::vector<double> psda_scores(const Spectrum& spec, const std::vector<double>& stimuli_hz,
                                double half_width_hz) {
  if (half_width_hz <= 0.0) {
    throw Error(ErrorCode::non_positive_parameter, "half width must be positive");
  }
  std::vector<double> scores(stimuli_hz.size(), 0.0);
  for (std::size_t k = 0; k < stimuli_hz.size(); ++k) {
    scores[k] = band_energy(spec, stimuli_hz[k], half_width_hz) +
                band_energy(spec, 2.0 * stimuli_hz[k], half_width_hz);
  }
  return scores;
}

std::size_t psda_recognize(const Spectrum& spec, const std::vector<double>& stimuli_hz,
                           double half_width_hz) {
  const auto scores = psda_scores(spec, stimuli_hz, half_width_hz);
  std::size_t best = 0;
  for (std::size_t k = 1; k < scores.size(); ++k) {
    if (scores[k] > scores[best]) best = k;
  }
  return best;
}

}  // namespace ssvep
