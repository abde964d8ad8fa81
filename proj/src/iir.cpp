#include "ssvepkit/iir.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "ssvepkit/error.hpp"

namespace ssvep {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
using cd = std::complex<double>;

cd bilinear(cd s, double fs2) { return (fs2 + s) / (fs2 - s); }

}  // namespace

SosChain butter_bandpass(int order, double low_hz, double high_hz,
                         double sampling_rate_hz) {
  const double nyquist = sampling_rate_hz / 2.0;
  if (order < 1 || order > 12) {
    throw Error(ErrorCode::invalid_config, "band-pass order out of range");
  }
  if (low_hz <= 0.0 || low_hz >= high_hz || high_hz >= nyquist) {
    throw Error(ErrorCode::band_edges_above_nyquist,
                "band edges must satisfy 0 < low < high < Nyquist");
  }

  // Pre-warped analog edges so the digital response crosses at low/high.
  const double fs2 = 2.0 * sampling_rate_hz;
  const double wl = fs2 * std::tan(kPi * low_hz / sampling_rate_hz);
  const double wh = fs2 * std::tan(kPi * high_hz / sampling_rate_hz);
  const double w0 = std::sqrt(wl * wh);
  const double bw = wh - wl;

  // Low-pass prototype poles on the unit circle, left half plane.
  std::vector<cd> proto(order);
  for (int i = 0; i < order; ++i) {
    const double ang = kPi * (2.0 * i + order + 1.0) / (2.0 * order);
    proto[i] = cd(std::cos(ang), std::sin(ang));
  }

  // Band-pass transform: each prototype pole p yields the two roots of
  // s^2 - (p*bw) s + w0^2 = 0.
  std::vector<cd> zpoles;
  for (const cd& p : proto) {
    const cd pb = p * bw;
    const cd disc = std::sqrt(pb * pb * 0.25 - cd(w0 * w0, 0.0));
    zpoles.push_back(bilinear(pb * 0.5 + disc, fs2));
    zpoles.push_back(bilinear(pb * 0.5 - disc, fs2));
  }

  // Group into conjugate pairs: sort by |imag| then real so a pole directly
  // precedes its conjugate partner.
  std::sort(zpoles.begin(), zpoles.end(), [](const cd& a, const cd& b) {
    const double ia = std::fabs(a.imag()), ib = std::fabs(b.imag());
    if (ia != ib) return ia < ib;
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  SosChain sos;
  for (int i = 0; i < order; ++i) {
    const cd p1 = zpoles[2 * i];
    const cd p2 = zpoles[2 * i + 1];
    Biquad q;
    // One zero at z=+1 and one at z=-1 per section: numerator (1 - z^-2).
    q.b0 = 1.0;
    q.b1 = 0.0;
    q.b2 = -1.0;
    q.a1 = -(p1 + p2).real();
    q.a2 = (p1 * p2).real();
    sos.push_back(q);
  }

  // Normalize to unity gain at the digital center frequency.
  const double fc = sampling_rate_hz / kPi * std::atan(w0 / fs2);
  const double mag = sos_magnitude(sos, fc, sampling_rate_hz);
  if (mag <= 0.0) {
    throw Error(ErrorCode::invalid_config, "degenerate band-pass design");
  }
  const double section_gain = std::pow(1.0 / mag, 1.0 / order);
  for (auto& q : sos) {
    q.b0 *= section_gain;
    q.b1 *= section_gain;
    q.b2 *= section_gain;
  }
  return sos;
}

Biquad notch_biquad(double f0_hz, double q_factor, double sampling_rate_hz) {
  if (f0_hz <= 0.0 || f0_hz >= sampling_rate_hz / 2.0) {
    throw Error(ErrorCode::band_edges_above_nyquist, "notch frequency must be below Nyquist");
  }
  const double w0 = 2.0 * kPi * f0_hz / sampling_rate_hz;
  const double alpha = std::sin(w0) / (2.0 * q_factor);
  const double a0 = 1.0 + alpha;
  Biquad q;
  q.b0 = 1.0 / a0;
  q.b1 = -2.0 * std::cos(w0) / a0;
  q.b2 = 1.0 / a0;
  q.a1 = -2.0 * std::cos(w0) / a0;
  q.a2 = (1.0 - alpha) / a0;
  return q;
}

namespace {

// Direct form II transposed, one section.
void biquad_filter(const Biquad& q, std::vector<double>& x, double z1_init,
                   double z2_init) {
  double z1 = z1_init, z2 = z2_init;
  for (double& v : x) {
    const double in = v;
    const double out = q.b0 * in + z1;
    z1 = q.b1 * in - q.a1 * out + z2;
    z2 = q.b2 * in - q.a2 * out;
    v = out;
  }
}

// Steady-state (step response) state for constant input u; returns the
// steady-state output which becomes the next section's input level.
double steady_state(const Biquad& q, double u, double& z1, double& z2) {
  const double denom = 1.0 + q.a1 + q.a2;
  const double y = denom != 0.0 ? (q.b0 + q.b1 + q.b2) / denom * u : 0.0;
  z2 = q.b2 * u - q.a2 * y;
  z1 = y - q.b0 * u;
  return y;
}

void sosfilt_zi(const SosChain& sos, std::vector<double>& x, double x0) {
  double level = x0;
  for (const auto& q : sos) {
    double z1 = 0.0, z2 = 0.0;
    level = steady_state(q, level, z1, z2);
    biquad_filter(q, x, z1, z2);
  }
}

}  // namespace

std::vector<double> sosfilt(const SosChain& sos, const std::vector<double>& x) {
  std::vector<double> y = x;
  for (const auto& q : sos) biquad_filter(q, y, 0.0, 0.0);
  return y;
}

namespace {

// Samples until the slowest pole's impulse response decays below ~1e-6.
std::size_t settle_samples(const SosChain& sos) {
  double rmax = 0.0;
  for (const auto& q : sos) {
    const double disc = q.a1 * q.a1 - 4.0 * q.a2;
    if (disc <= 0.0) {
      rmax = std::max(rmax, std::sqrt(std::max(q.a2, 0.0)));
    } else {
      rmax = std::max({rmax, std::fabs((-q.a1 + std::sqrt(disc)) / 2.0),
                       std::fabs((-q.a1 - std::sqrt(disc)) / 2.0)});
    }
  }
  if (rmax <= 0.0 || rmax >= 1.0) return 1000;
  return static_cast<std::size_t>(std::ceil(13.8 / -std::log(rmax)));
}

}  // namespace

std::vector<double> sosfiltfilt(const SosChain& sos, const std::vector<double>& x) {
  const std::size_t n = x.size();
  if (n < 2) return x;

  const std::size_t pad =
      std::min<std::size_t>(n - 1, std::max<std::size_t>(settle_samples(sos),
                                                         12 * sos.size() + 3));

  // Odd reflection about the end points.
  std::vector<double> ext;
  ext.reserve(n + 2 * pad);
  for (std::size_t i = pad; i >= 1; --i) ext.push_back(2.0 * x.front() - x[i]);
  ext.insert(ext.end(), x.begin(), x.end());
  for (std::size_t i = 1; i <= pad; ++i) ext.push_back(2.0 * x.back() - x[n - 1 - i]);

  sosfilt_zi(sos, ext, ext.front());
  std::reverse(ext.begin(), ext.end());
  sosfilt_zi(sos, ext, ext.front());
  std::reverse(ext.begin(), ext.end());

  return std::vector<double>(ext.begin() + static_cast<std::ptrdiff_t>(pad),
                             ext.begin() + static_cast<std::ptrdiff_t>(pad + n));
}

double sos_magnitude(const SosChain& sos, double f_hz, double sampling_rate_hz) {
  const double w = 2.0 * kPi * f_hz / sampling_rate_hz;
  const cd zinverse = std::polar(1.0, -w);
  cd h(1.0, 0.0);
  for (const auto& q : sos) {
    h *= (q.b0 + q.b1 * zinverse + q.b2 * zinverse * zinverse) /
         (1.0 + q.a1 * zinverse + q.a2 * zinverse * zinverse);
  }
  return std::abs(h);
}

}  // namespace ssvep
