#pragma once

#include <cstddef>
#include <vector>

namespace ssvep {

// One second-order section, coefficients normalized so a0 = 1.
struct Biquad {
  double b0{1.0}, b1{0.0}, b2{0.0};
  double a1{0.0}, a2{0.0};
};

using SosChain = std::vector<Biquad>;

// Butterworth band-pass of prototype order `order` (2*order poles overall),
// bilinear transform with edge pre-warping, unity gain at the geometric
// center frequency. Edges must satisfy 0 < low < high < Nyquist.
SosChain butter_bandpass(int order, double low_hz, double high_hz,
                         double sampling_rate_hz);

// Single-biquad notch at f0 with the given quality factor.
Biquad notch_biquad(double f0_hz, double q, double sampling_rate_hz);

// Causal single pass through the section chain.
std::vector<double> sosfilt(const SosChain& sos, const std::vector<double>& x);

// Forward-backward filtering with odd-reflection padding and steady-state
// initial conditions; zero phase, squared magnitude response.
std::vector<double> sosfiltfilt(const SosChain& sos, const std::vector<double>& x);

// |H(f)| of the cascade at one frequency.
double sos_magnitude(const SosChain& sos, double f_hz, double sampling_rate_hz);

}  // namespace ssvep
