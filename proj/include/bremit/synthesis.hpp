#ifndef BREMIT_SYNTHESIS_HPP
#define BREMIT_SYNTHESIS_HPP

#include <functional>

#include "bremit/rng.hpp"
#include "bremit/trajectory.hpp"

namespace bremit {

/// Stationary Gaussian series whose expected periodogram matches target_psd
/// on [0, pi/dt] under the one-sided convention. Gaussian frequency-domain
/// synthesis: each Fourier mode drawn with variance N*S(omega_k)/dt, then
/// inverse FFT. n is padded up to a power of two internally and the first n
/// samples returned; the sample mean is exactly zero (DC mode excluded).
/// Deterministic for a fixed seed.
Trajectory synthesize_trajectory(const std::function<double(double)>& target_psd,
                                 std::size_t n, double dt, std::uint64_t seed,
                                 TrajectoryKind kind = TrajectoryKind::Velocity);

/// Discrete classical Langevin force generator: white level + first
/// difference of an independent white sequence for the violet part, so the
/// PSD is white_level + violet_level * (2 - 2 cos(omega dt))/dt^2
/// (= violet_level * omega^2 at low frequency). Streams are independent.
class ForceNoise {
 public:
  ForceNoise(const NoiseSpec& spec, double dt, std::uint64_t seed);
  double next();

 private:
  double white_sigma_;
  double violet_scale_;
  GaussianStream white_;
  GaussianStream violet_;
  double prev_eta_;
};

}  // namespace bremit

#endif
