#pragma once

#include <cstddef>
#include <vector>

#include "ssvepkit/linalg.hpp"

namespace ssvep {

// Sinusoidal reference set for one stimulus frequency: rows
// sin(2 pi h f n / fs), cos(2 pi h f n / fs) for h = 1..n_harmonics.
struct CcaReference {
  Matrix signals;  // (2 * n_harmonics) x n_samples
  double frequency_hz{0.0};
  std::size_t n_harmonics{2};
};

CcaReference make_cca_reference(double frequency_hz, std::size_t n_harmonics,
                                std::size_t n_samples, double sampling_rate_hz);

// Largest canonical correlation between the row spaces of a and b, computed
// by reducing the generalized eigenproblem on the blocked covariances to an
// ordinary symmetric one (Jacobi). Result clamped to [0, 1].
double cca_correlation(const Matrix& a, const Matrix& b);

// rho_k against each stimulus reference; argmax with lowest-index tie-break.
std::size_t cca_recognize(const Matrix& eeg, const std::vector<double>& stimuli_hz,
                          std::size_t n_harmonics, double sampling_rate_hz);

// Per-class correlations, for callers that need the scores.
std::vector<double> cca_scores(const Matrix& eeg, const std::vector<double>& stimuli_hz,
                               std::size_t n_harmonics, double sampling_rate_hz);

}  // namespace ssvep
