#include "ssvepkit/cca.hpp"

#include <algorithm>
#include <cmath>

#include "ssvepkit/error.hpp"

namespace ssvep {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kRidge = 1e-10;  // relative diagonal loading

Matrix center_rows(const Matrix& m) {
  Matrix out = m;
  for (std::size_t r = 0; r < out.rows; ++r) {
    double mean = 0.0;
    for (std::size_t c = 0; c < out.cols; ++c) mean += out(r, c);
    mean /= static_cast<double>(out.cols);
    for (std::size_t c = 0; c < out.cols; ++c) out(r, c) -= mean;
  }
  return out;
}

// Inverse square root of a symmetric positive definite matrix via Jacobi.
Matrix inv_sqrt_spd(const Matrix& m) {
  const auto dec = jacobi_eigh(m);
  double trace = 0.0;
  for (double v : dec.values) trace += v;
  const double floor = std::max(trace, 1e-300) * 1e-14;
  Matrix scaled = dec.vectors;  // columns scaled by 1/sqrt(lambda)
  for (std::size_t j = 0; j < m.cols; ++j) {
    if (dec.values[j] <= floor) {
      throw Error(ErrorCode::degenerate_covariance,
                  "covariance block is rank deficient beyond regularization");
    }
    const double s = 1.0 / std::sqrt(dec.values[j]);
    for (std::size_t i = 0; i < m.rows; ++i) scaled(i, j) *= s;
  }
  return matmul(scaled, transpose(dec.vectors));
}

}  // namespace

CcaReference make_cca_reference(double frequency_hz, std::size_t n_harmonics,
                                std::size_t n_samples, double sampling_rate_hz) {
  if (n_harmonics == 0 || frequency_hz <= 0.0) {
    throw Error(ErrorCode::non_positive_parameter, "reference needs f > 0 and harmonics >= 1");
  }
  if (static_cast<double>(n_harmonics) * frequency_hz >= sampling_rate_hz / 2.0) {
    throw Error(ErrorCode::nyquist_violation,
                "reference harmonic " + std::to_string(n_harmonics * frequency_hz) +
                    " Hz is not below Nyquist");
  }
  CcaReference ref;
  ref.frequency_hz = frequency_hz;
  ref.n_harmonics = n_harmonics;
  ref.signals = Matrix(2 * n_harmonics, n_samples);
  for (std::size_t h = 1; h <= n_harmonics; ++h) {
    for (std::size_t t = 0; t < n_samples; ++t) {
      const double ang = 2.0 * kPi * static_cast<double>(h) * frequency_hz *
                         static_cast<double>(t) / sampling_rate_hz;
      ref.signals(2 * (h - 1), t) = std::sin(ang);
      ref.signals(2 * (h - 1) + 1, t) = std::cos(ang);
    }
  }
  return ref;
}

double cca_correlation(const Matrix& a_in, const Matrix& b_in) {
  if (a_in.cols != b_in.cols) {
    throw Error(ErrorCode::dimension_mismatch, "signal sets must share the time axis");
  }
  if (a_in.rows == 0 || b_in.rows == 0 || a_in.cols <= a_in.rows ||
      b_in.cols <= b_in.rows) {
    throw Error(ErrorCode::dimension_mismatch,
                "need more time samples than rows in each signal set");
  }
  const Matrix a = center_rows(a_in);
  const Matrix b = center_rows(b_in);

  Matrix caa = matmul(a, transpose(a));
  Matrix cbb = matmul(b, transpose(b));
  const Matrix cab = matmul(a, transpose(b));

  // Diagonal loading keeps short-window covariance blocks invertible.
  double tr_a = 0.0, tr_b = 0.0;
  for (std::size_t i = 0; i < caa.rows; ++i) tr_a += caa(i, i);
  for (std::size_t i = 0; i < cbb.rows; ++i) tr_b += cbb(i, i);
  for (std::size_t i = 0; i < caa.rows; ++i) {
    caa(i, i) += kRidge * tr_a / static_cast<double>(caa.rows);
  }
  for (std::size_t i = 0; i < cbb.rows; ++i) {
    cbb(i, i) += kRidge * tr_b / static_cast<double>(cbb.rows);
  }

  const Matrix wa = inv_sqrt_spd(caa);
  const Matrix wb = inv_sqrt_spd(cbb);
  const Matrix g = matmul(wa, matmul(cab, wb));  // rows(a) x rows(b)

  // rho^2 = largest eigenvalue of the smaller gram matrix of g.
  Matrix gram;
  if (g.rows <= g.cols) {
    gram = matmul(g, transpose(g));
  } else {
    gram = matmul(transpose(g), g);
  }
  const auto dec = jacobi_eigh(gram);
  const double lambda_max = dec.values.back();
  const double rho = lambda_max > 0.0 ? std::sqrt(lambda_max) : 0.0;
  return std::clamp(rho, 0.0, 1.0);
}

std::vector<double> cca_scores(const Matrix& eeg, const std::vector<double>& stimuli_hz,
                               std::size_t n_harmonics, double sampling_rate_hz) {
  std::vector<double> rho(stimuli_hz.size(), 0.0);
  for (std::size_t k = 0; k < stimuli_hz.size(); ++k) {
    const auto ref =
        make_cca_reference(stimuli_hz[k], n_harmonics, eeg.cols, sampling_rate_hz);
    rho[k] = cca_correlation(eeg, ref.signals);
  }
  return rho;
}

std::size_t cca_recognize(const Matrix& eeg, const std::vector<double>& stimuli_hz,
                          std::size_t n_harmonics, double sampling_rate_hz) {
  const auto rho = cca_scores(eeg, stimuli_hz, n_harmonics, sampling_rate_hz);
  std::size_t best = 0;
  for (std::size_t k = 1; k < rho.size(); ++k) {
    if (rho[k] > rho[best]) best = k;
  }
  return best;
}

}  // namespace ssvep
