#ifndef BREMIT_PARAMS_HPP
#define BREMIT_PARAMS_HPP

#include <optional>
#include <string>

#include "bremit/units.hpp"

namespace bremit {

/// Statistics of the driving noise: Quantum keeps the full
/// hbar*omega*coth(hbar*omega/2kT) energy factor, Classical replaces it
/// by 2kT everywhere.
enum class Statistics { Quantum, Classical };

/// Radiation time constant tau0 = q^2 / (6 pi eps0 m c^3).
double tau0_from_charge(double q, double m, const PhysicalConstants& consts);

/// High-frequency cutoff Omega = 2 m c^2 / hbar.
double cutoff_frequency(double m, const PhysicalConstants& consts);

/// Validated parameter set of the damped, radiating oscillator. Immutable
/// after construction; safe to share across threads.
struct EmitterParams {
  double m = 1.0;        // mass
  double gamma0 = 0.0;   // environmental friction rate
  double omega0 = 0.0;   // oscillator own frequency
  double tau0 = 0.0;     // radiation time constant
  double T = 0.0;        // temperature
  double cutoff = 0.0;   // high-frequency cutoff Omega
  UnitSystem units = UnitSystem::si();

  const PhysicalConstants& consts() const { return units.constants(); }
  double hbar() const { return units.constants().hbar; }
  double kT() const { return units.constants().k_B * T; }
};

/// Named-field bundle used to build EmitterParams. tau0 may be given
/// directly or derived from a charge; cutoff defaults to 2mc^2/hbar.
struct ParamSpec {
  std::optional<double> m;
  std::optional<double> gamma0;
  std::optional<double> omega0;
  std::optional<double> tau0;
  std::optional<double> charge;  // used when tau0 is absent
  std::optional<double> T;
  std::optional<double> cutoff;
  UnitSystem units = UnitSystem::si();
};

/// Validates and completes a ParamSpec. Throws validation_error naming the
/// offending field.
EmitterParams make_params(const ParamSpec& spec);

/// The electron in vacuum at T = 0 in natural electron units:
/// m = 1, gamma0 = 0, omega0 = 0, tau0 = 2 alpha / 3, cutoff = 2.
EmitterParams natural_electron_vacuum();

/// Re-expresses params in another unit system (SI <-> natural <-> reduced).
EmitterParams convert(const EmitterParams& p, const UnitSystem& to);

}  // namespace bremit

#endif
