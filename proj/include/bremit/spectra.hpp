#ifndef BREMIT_SPECTRA_HPP
#define BREMIT_SPECTRA_HPP

#include <vector>

#include "bremit/friction.hpp"
#include "bremit/params.hpp"

namespace bremit {

/// All spectral densities use the one-sided convention
///   C(tau) = (1/pi) * integral_0^inf S(omega) cos(omega tau) domega,
/// i.e. S coincides with the two-sided angular-frequency PSD restricted to
/// omega >= 0. Synthesis and estimation in the stochastic module use the
/// same convention.

enum class SpectrumKind { XX, VV, FF };

struct SpectrumSamples {
  std::vector<double> omegas;  // strictly increasing, >= 0
  std::vector<double> values;  // finite, >= 0
  SpectrumKind kind = SpectrumKind::XX;
  EmitterParams params;
  std::string model;

  void validate() const;
};

/// hbar*omega*coth(hbar*omega/2kT) with its removable limits:
/// E(0,T) = 2kT, E(omega,0) = hbar*omega, E(0,0) = 0.
double quantum_energy_factor(double omega, double T, const PhysicalConstants& consts);

/// Same factor through params; Classical statistics replace it by 2kT.
double energy_factor(const EmitterParams& params, double omega,
                     Statistics stats = Statistics::Quantum);

/// Langevin-force spectral density m*gamma(omega)*E(omega,T)
/// (classical: 2*m*kT*gamma(omega)).
double s_ff(const FrictionModel& model, double omega, const EmitterParams& params,
            Statistics stats = Statistics::Quantum);

/// Oscillator amplitude spectral density
///   S_XX = E(omega,T) * gamma(omega) / (m [(omega^2-omega0^2)^2 + omega^2 gamma^2]).
/// Finite at omega = 0; throws singularity_error at an undamped resonance.
double s_xx(const EmitterParams& params, const FrictionModel& model, double omega,
            Statistics stats = Statistics::Quantum);

/// Relaxation (Lorentzian) approximation around the resonance:
///   [E(omega0,T)/(2 m omega0^2)] * (gamma/2) / ((omega-omega0)^2 + gamma^2/4),
/// gamma = gamma(omega0). Requires omega0 > 0.
double s_xx_lorentzian(const EmitterParams& params, const FrictionModel& model,
                       double omega, Statistics stats = Statistics::Quantum);

/// Velocity spectral density omega^2 * S_XX; for omega0 = 0 evaluated in the
/// reduced free-particle form E(omega,T)*gamma / (m (omega^2 + gamma^2)).
double s_vv(const EmitterParams& params, const FrictionModel& model, double omega,
            Statistics stats = Statistics::Quantum);

/// Spectral density of the integrated vacuum Langevin force,
/// (m/tau0)*E(omega,T); classical: 2 m kT / tau0, flat.
double s_ff_integrated(const EmitterParams& params, double omega,
                       Statistics stats = Statistics::Quantum);

struct OptimalFriction {
  double gamma_opt;  // = omega
  double svv_max;    // = E(omega,T)/(2 m omega); classical kT/(m omega)
};

/// Friction maximizing the free-particle velocity spectral density at a
/// given frequency.
OptimalFriction optimal_friction_svv(double omega, const EmitterParams& params,
                                     Statistics stats = Statistics::Quantum);

/// Batch evaluation over an omega grid.
enum class GridSpacing { Linear, Log };
std::vector<double> make_omega_grid(double omega_min, double omega_max,
                                    std::size_t points, GridSpacing spacing);
SpectrumSamples evaluate_spectrum(SpectrumKind kind, const EmitterParams& params,
                                  const FrictionModel& model,
                                  const std::vector<double>& omegas,
                                  Statistics stats = Statistics::Quantum);

}  // namespace bremit

#endif
