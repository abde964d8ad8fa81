#include "ssvepkit/fft.hpp"

#include <cmath>
#include <cstddef>

namespace ssvep {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Iterative Cooley-Tukey, n must be a power of two.
void fft_radix2(std::vector<cdouble>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n <= 1) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * kPi / static_cast<double>(len);
    const cdouble wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cdouble w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        cdouble u = a[i + k];
        cdouble v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

// Bluestein chirp-z for arbitrary n, expressed as a circular convolution of
// power-of-two length >= 2n-1.
void fft_bluestein(std::vector<cdouble>& a, bool inverse) {
  const std::size_t n = a.size();
  const std::size_t m = next_power_of_two(2 * n - 1);

  // Chirp exponents k^2 mod 2n keep the angle argument bounded.
  std::vector<cdouble> chirp(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t k2 = (k * k) % (2 * n);
    const double ang = (inverse ? 1.0 : -1.0) * kPi * static_cast<double>(k2) /
                       static_cast<double>(n);
    chirp[k] = cdouble(std::cos(ang), std::sin(ang));
  }

  std::vector<cdouble> u(m, cdouble(0.0, 0.0));
  std::vector<cdouble> v(m, cdouble(0.0, 0.0));
  for (std::size_t k = 0; k < n; ++k) u[k] = a[k] * chirp[k];
  v[0] = std::conj(chirp[0]);
  for (std::size_t k = 1; k < n; ++k) {
    v[k] = std::conj(chirp[k]);
    v[m - k] = std::conj(chirp[k]);
  }

  fft_radix2(u, false);
  fft_radix2(v, false);
  for (std::size_t k = 0; k < m; ++k) u[k] *= v[k];
  fft_radix2(u, true);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n; ++k) a[k] = u[k] * scale * chirp[k];
}

void transform(std::vector<cdouble>& data, bool inverse) {
  if (data.size() <= 1) return;
  if (is_power_of_two(data.size())) {
    fft_radix2(data, inverse);
  } else {
    fft_bluestein(data, inverse);
  }
}

}  // namespace

void fft(std::vector<cdouble>& data) { transform(data, false); }

void ifft(std::vector<cdouble>& data) {
  transform(data, true);
  const double scale = 1.0 / static_cast<double>(data.size());
  for (auto& x : data) x *= scale;
}

}  // namespace ssvep
