#include "bremit/estimators.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "bremit/errors.hpp"
#include "bremit/fft.hpp"

namespace bremit {

PsdEstimate estimate_psd(const Trajectory& traj, std::size_t segment_length,
                         WindowKind window, double overlap) {
  traj.validate();
  const std::size_t n = traj.samples.size();
  if (!is_power_of_two(segment_length)) {
    throw validation_error("estimate_psd: segment_length must be a power of two");
  }
  if (segment_length > n) {
    throw validation_error("estimate_psd: segment_length exceeds trajectory length");
  }
  if (!(overlap >= 0.0 && overlap < 1.0)) {
    throw validation_error("estimate_psd: overlap must lie in [0, 1)");
  }
  const std::size_t L = segment_length;
  const std::size_t hop =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(
                                   static_cast<double>(L) * (1.0 - overlap))));
  const std::size_t n_segments = (n - L) / hop + 1;
  if (n_segments < 8) {
    throw validation_error("estimate_psd: fewer than 8 segments; shorten segment_length");
  }

  std::vector<double> w(L, 1.0);
  if (window == WindowKind::Hann) {
    for (std::size_t i = 0; i < L; ++i) {
      w[i] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                   static_cast<double>(L)));
    }
  }
  double wpow = 0.0;
  for (double v : w) wpow += v * v;

  const double mu = traj.mean();
  const std::size_t bins = L / 2 + 1;
  std::vector<double> acc(bins, 0.0), acc2(bins, 0.0);
  std::vector<std::complex<double>> seg(L);
  for (std::size_t s = 0; s < n_segments; ++s) {
    const std::size_t off = s * hop;
    for (std::size_t i = 0; i < L; ++i) {
      seg[i] = {(traj.samples[off + i] - mu) * w[i], 0.0};
    }
    const auto spec = fft_forward(seg);
    for (std::size_t k = 0; k < bins; ++k) {
      const double p = traj.dt * std::norm(spec[k]) / wpow;
      acc[k] += p;
      acc2[k] += p * p;
    }
  }

  PsdEstimate est;
  est.window = window;
  est.n_segments = n_segments;
  est.omegas.resize(bins);
  est.values.resize(bins);
  est.variance_of_estimate.resize(bins);
  const double domega = 2.0 * std::numbers::pi / (static_cast<double>(L) * traj.dt);
  const double M = static_cast<double>(n_segments);
  for (std::size_t k = 0; k < bins; ++k) {
    est.omegas[k] = domega * static_cast<double>(k);
    est.values[k] = acc[k] / M;
    const double var_seg = std::max(0.0, acc2[k] / M - est.values[k] * est.values[k]);
    est.variance_of_estimate[k] = var_seg / M;  // variance of the mean
  }
  est.validate();
  return est;
}

namespace {

// Unnormalized circular-free correlation sums S(m) = sum_k x_k x_{k+m},
// via zero-padded FFT.
std::vector<double> correlation_sums(const std::vector<double>& x, std::size_t max_lag) {
  const std::size_t n = x.size();
  const std::size_t N = next_power_of_two(2 * n);
  std::vector<std::complex<double>> buf(N, {0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) buf[i] = {x[i], 0.0};
  auto spec = fft_forward(buf);
  for (auto& c : spec) c = std::norm(c);
  const auto corr = fft_inverse(spec);
  std::vector<double> out(max_lag + 1);
  const double norm = 1.0 / static_cast<double>(N);
  for (std::size_t m = 0; m <= max_lag; ++m) out[m] = corr[m].real() * norm;
  return out;
}

}  // namespace

std::vector<double> estimate_autocorrelation(const Trajectory& traj, std::size_t max_lag) {
  traj.validate();
  const std::size_t n = traj.samples.size();
  if (!(max_lag < n / 4)) {
    throw validation_error("estimate_autocorrelation: max_lag must be < length/4");
  }
  const double mu = traj.mean();
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = traj.samples[i] - mu;
  auto sums = correlation_sums(x, max_lag);
  for (auto& v : sums) v /= static_cast<double>(n);  // biased estimator
  return sums;
}

std::vector<double> estimate_msd(const Trajectory& traj, std::size_t max_lag) {
  traj.validate();
  const std::size_t n = traj.samples.size();
  if (!(max_lag < n)) throw validation_error("estimate_msd: max_lag must be < length");
  const auto& x = traj.samples;
  auto sab = correlation_sums(x, max_lag);

  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) sq[i] = x[i] * x[i];
  double total = 0.0;
  for (double v : sq) total += v;

  std::vector<double> msd(max_lag + 1, 0.0);
  double head = 0.0, tail = 0.0;  // sum of first m / last m squares
  for (std::size_t m = 1; m <= max_lag; ++m) {
    head += sq[m - 1];
    tail += sq[n - m];
    const double q = 2.0 * total - head - tail;
    msd[m] = (q - 2.0 * sab[m]) / static_cast<double>(n - m);
  }
  return msd;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw validation_error("fit_slope: need matching arrays of length >= 2");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw numeric_error("fit_slope: degenerate abscissae");
  return (n * sxy - sx * sy) / denom;
}

}  // namespace bremit
