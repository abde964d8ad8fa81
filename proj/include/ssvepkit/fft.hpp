#pragma once

#include <complex>
#include <vector>

namespace ssvep {

using cdouble = std::complex<double>;

// In-place forward DFT, X[k] = sum_n x[n] e^{-j 2 pi k n / N}. Radix-2 for
// power-of-two sizes, Bluestein chirp-z otherwise. No normalization.
void fft(std::vector<cdouble>& data);

// Inverse DFT with 1/N normalization.
void ifft(std::vector<cdouble>& data);

}  // namespace ssvep
