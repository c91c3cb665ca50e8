#include "bremit/synthesis.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "bremit/errors.hpp"
#include "bremit/fft.hpp"

namespace bremit {

void Trajectory::validate() const {
  if (!(dt > 0.0)) throw validation_error("Trajectory: dt must be positive");
  if (samples.size() < 2) throw validation_error("Trajectory: needs >= 2 samples");
  for (double v : samples) {
    if (!std::isfinite(v)) throw validation_error("Trajectory: samples must be finite");
  }
}

double Trajectory::mean() const {
  double s = 0.0;
  for (double v : samples) s += v;
  return s / static_cast<double>(samples.size());
}

double Trajectory::variance() const {
  const double mu = mean();
  double s = 0.0;
  for (double v : samples) s += (v - mu) * (v - mu);
  return s / static_cast<double>(samples.size());
}

void PsdEstimate::validate() const {
  if (omegas.size() != values.size() || omegas.size() != variance_of_estimate.size()) {
    throw validation_error("PsdEstimate: array lengths must match");
  }
  for (double v : values) {
    if (!(v >= 0.0)) throw validation_error("PsdEstimate: values must be >= 0");
  }
}

void NoiseSpec::validate(bool allow_zero) const {
  if (!(white_level >= 0.0) || !(violet_level >= 0.0)) {
    throw validation_error("NoiseSpec: levels must be >= 0");
  }
  if (!allow_zero && white_level == 0.0 && violet_level == 0.0) {
    throw validation_error("NoiseSpec: both levels zero (driving noise absent)");
  }
}

Trajectory synthesize_trajectory(const std::function<double(double)>& target_psd,
                                 std::size_t n, double dt, std::uint64_t seed,
                                 TrajectoryKind kind) {
  if (!(dt > 0.0)) throw validation_error("synthesize_trajectory: dt must be positive");
  if (n < 2) throw validation_error("synthesize_trajectory: n must be >= 2");
  const std::size_t N = next_power_of_two(n);
  const double domega = 2.0 * std::numbers::pi / (static_cast<double>(N) * dt);

  auto psd_at = [&](std::size_t k) {
    const double s = target_psd(domega * static_cast<double>(k));
    if (!std::isfinite(s) || s < 0.0) {
      throw validation_error("synthesize_trajectory: target PSD returned a negative or non-finite value");
    }
    return s;
  };

  GaussianStream gauss(seed, /*stream=*/0);
  std::vector<std::complex<double>> modes(N, {0.0, 0.0});
  const double amp_scale = std::sqrt(static_cast<double>(N) / dt);
  // modes[0] stays zero: exactly zero sample mean.
  for (std::size_t k = 1; k < N / 2; ++k) {
    const double sigma = amp_scale * std::sqrt(psd_at(k));
    const double re = gauss.next() * std::numbers::sqrt2 / 2.0;
    const double im = gauss.next() * std::numbers::sqrt2 / 2.0;
    modes[k] = sigma * std::complex<double>(re, im);
    modes[N - k] = std::conj(modes[k]);
  }
  modes[N / 2] = amp_scale * std::sqrt(psd_at(N / 2)) * gauss.next();

  const auto series = fft_inverse(modes);
  Trajectory traj;
  traj.dt = dt;
  traj.kind = kind;
  traj.seed = seed;
  traj.samples.resize(n);
  const double norm = 1.0 / static_cast<double>(N);
  for (std::size_t i = 0; i < n; ++i) traj.samples[i] = series[i].real() * norm;
  traj.validate();
  return traj;
}

ForceNoise::ForceNoise(const NoiseSpec& spec, double dt, std::uint64_t seed)
    : white_sigma_(0.0),
      violet_scale_(0.0),
      white_(seed, /*stream=*/1),
      violet_(seed, /*stream=*/2),
      prev_eta_(0.0) {
  spec.validate(/*allow_zero=*/true);
  if (!(dt > 0.0)) throw validation_error("ForceNoise: dt must be positive");
  white_sigma_ = std::sqrt(spec.white_level / dt);
  violet_scale_ = std::sqrt(spec.violet_level / (dt * dt * dt));
  prev_eta_ = violet_.next();
}

double ForceNoise::next() {
  const double eta = violet_.next();
  const double f = white_sigma_ * white_.next() + violet_scale_ * (eta - prev_eta_);
  prev_eta_ = eta;
  return f;
}

}  // namespace bremit
