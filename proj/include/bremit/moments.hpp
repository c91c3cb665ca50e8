#ifndef BREMIT_MOMENTS_HPP
#define BREMIT_MOMENTS_HPP

#include <optional>
#include <string>

#include "bremit/params.hpp"
#include "bremit/quadrature.hpp"

namespace bremit {

/// A computed moment with its error estimate and, when one exists, the
/// closed form it must agree with (within 10x the requested tolerance).
struct MomentReport {
  double value = 0.0;
  double estimated_error = 0.0;
  std::optional<double> closed_form;
  std::string formula_id;

  void validate(double rel_tol, double abs_floor = 1e-300) const;
};

/// Stationary velocity dispersion C_VV(0) = (1/pi) * integral_0^Omega S_VV.
/// The emitter's own radiative friction gamma0 + omega^2 tau0 is used.
/// Vacuum case (gamma0 = 0, T = 0, omega0 = 0, tau0 > 0) also reports the
/// closed form (hbar / 2 pi m tau0) ln(1 + Omega^2 tau0^2); the classical
/// Ohmic free particle dispatches to equipartition kT/m.
MomentReport velocity_dispersion(const EmitterParams& params, const QuadratureSpec& quad,
                                 Statistics stats = Statistics::Quantum);

/// The mass-independent numbers of a charged particle in vacuum, plus their
/// electron values in SI.
struct UniversalReport {
  double omega_tau;                  // Omega*tau0 = 4 alpha / 3
  double inv_omega_tau;              // ~ 103
  double velocity_dispersion_over_c2;  // 4 alpha / 3 pi
  double rms_velocity_over_c;        // ~ 1/18
  double mean_free_path_factor;      // sqrt(4 alpha / 3 pi), in units of hbar/mc
  double electron_mean_free_path_m;  // sqrt(2 hbar tau0 / pi m_e) ~ 21 fm
  double electron_diameter_m;        // 2 alpha hbar / m_e c
  double electron_compton_frequency; // Omega/2, rad/s
};
UniversalReport universal_constants(const PhysicalConstants& consts);

/// Einstein diffusion constant D = kT/(m gamma0) and the vacuum-friction
/// constant D0 = kT tau0 / m; each is absent when its rate vanishes.
struct DiffusionConstants {
  std::optional<double> D;
  std::optional<double> D0;
};
DiffusionConstants diffusion_constants(const EmitterParams& params);

enum class AcfCase { OhmicClassical, VacuumClassical, VacuumQuantum };

/// Closed-form velocity autocorrelation for the two classical cases;
/// numerical cosine transform of the vacuum quantum spectrum (with cutoff)
/// for VacuumQuantum.
MomentReport autocorrelation_analytic(const EmitterParams& params, double tau,
                                      AcfCase which,
                                      const QuadratureSpec& quad = QuadratureSpec{});

/// Position dispersion of the vacuum quantum particle,
///   sigma^2(t) = (2/pi) integral_0^Omega S_VV(omega) (1-cos omega t)/omega^2,
/// with the asymptote (2 hbar tau0 / pi m) ln(t / tau0) as closed form.
/// Requires gamma0 = 0, T = 0, omega0 = 0, tau0 > 0, t > 0.
MomentReport position_dispersion_log(const EmitterParams& params, double t,
                                     const QuadratureSpec& quad);

}  // namespace bremit

#endif
