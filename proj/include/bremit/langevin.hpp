#ifndef BREMIT_LANGEVIN_HPP
#define BREMIT_LANGEVIN_HPP

#include <utility>

#include "bremit/potential.hpp"
#include "bremit/synthesis.hpp"

namespace bremit {

struct LangevinOptions {
  double x0 = 0.0;
  double v0 = 0.0;
  /// Transient discarded before the returned samples; negative selects the
  /// default 10 * max(1/gamma0, 1/omega0).
  double burn_in_time = -1.0;
};

/// Classical time-domain integration of
///   m x'' = -U'(x) - [m gamma0 + tau0 U''(x)] x' + F(t),
/// F = white noise of PSD 2 m kT gamma0 plus violet noise of PSD
/// 2 m kT tau0 omega^2 (first difference of an independent white sequence).
/// Symmetric half-kick / drift / half-kick splitting, friction and noise in
/// the kicks; weak order 1; deterministic per seed.
///
/// The free particle in vacuum (gamma0 = 0, tau0 > 0, U = 0) has no
/// velocity-damping term, so it is integrated in its reduced overdamped
/// form x' = (tau0/m) f with S_ff = 2 m kT / tau0, which reproduces the
/// vacuum diffusion constant D0 = kT tau0 / m exactly.
///
/// Throws step_size_error when dt * gamma_eff(x) > 0.1 (with a suggested
/// step) and divergence_error when the state leaves the finite range.
std::pair<Trajectory, Trajectory> integrate_langevin_classical(
    const Potential& potential, const EmitterParams& params, std::size_t n,
    double dt, std::uint64_t seed, const LangevinOptions& options = {});

}  // namespace bremit

#endif
