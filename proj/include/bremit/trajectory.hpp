#ifndef BREMIT_TRAJECTORY_HPP
#define BREMIT_TRAJECTORY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bremit/params.hpp"

namespace bremit {

enum class TrajectoryKind { Position, Velocity };

/// Uniformly sampled time series with seed provenance.
struct Trajectory {
  double dt = 0.0;
  std::vector<double> samples;
  TrajectoryKind kind = TrajectoryKind::Position;
  std::uint64_t seed = 0;
  std::optional<EmitterParams> params;

  void validate() const;
  double mean() const;
  double variance() const;  // biased (1/N), about the sample mean
};

enum class WindowKind { Rectangular, Hann };

/// Welch-averaged periodogram on the library's one-sided convention:
/// C(0) = (1/pi) * integral_0^{pi/dt} S(omega) domega.
struct PsdEstimate {
  std::vector<double> omegas;  // uniform, 0 .. pi/dt
  std::vector<double> values;
  std::size_t n_segments = 0;
  WindowKind window = WindowKind::Hann;
  std::vector<double> variance_of_estimate;  // per-bin standard error, squared

  void validate() const;
};

/// Levels of the two classical Langevin force components:
/// white (flat 2 m kT gamma0) and violet (2 m kT tau0 * omega^2 at low omega).
struct NoiseSpec {
  double white_level = 0.0;
  double violet_level = 0.0;

  void validate(bool allow_zero = false) const;
};

}  // namespace bremit

#endif
