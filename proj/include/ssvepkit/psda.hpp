#pragma once

#include <cstddef>
#include <vector>

#include "ssvepkit/dsp.hpp"

namespace ssvep {

// Class scores c_k: band energy inside the unit filter at f_k plus the unit
// filter at 2 f_k.
std::vector<double> psda_scores(const Spectrum& spec, const std::vector<double>& stimuli_hz,
                                double half_width_hz);

// argmax_k c_k, lowest-index tie-break. Throws BandExceedsSpectrumRange when
// a band sticks out of the spectrum.
std::size_t psda_recognize(const Spectrum& spec, const std::vector<double>& stimuli_hz,
                           double half_width_hz);

}  // namespace ssvep
