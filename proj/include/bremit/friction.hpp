#ifndef BREMIT_FRICTION_HPP
#define BREMIT_FRICTION_HPP

#include <string>
#include <vector>

#include "bremit/params.hpp"

namespace bremit {

enum class FrictionKind {
  Radiative,          // gamma0 + omega^2 tau0
  Ohmic,              // gamma0
  WhiteNoiseInduced,  // gamma0 * tanh(x)/x,  x = hbar*omega/2kT
  SinhTwin,           // gamma0 * sinh(x)/x
  SechTwin,           // gamma0 / cosh(x)
  PhononPreset,       // constant 3 pi m omega0^4 / (2 M omegaD^3)
  Custom,             // tabulated, log-linear interpolation
};

/// Friction constant of a particle coupled to a Debye phonon bath,
/// 3 pi m omega0^4 / (2 M omegaD^3). Requires omega0 <= omegaD.
double phonon_gamma0(double m, double M, double omega0, double omegaD);

/// Effective friction shared between the spectral half-width and the
/// kinetic operators: gamma0 + tau0 * omega_sq, where omega_sq is either
/// omega^2 (spectra) or U''(x)/m (kinetics). omega_sq may be negative for
/// concave potentials; callers check validity.
inline double gamma_effective(double gamma0, double tau0, double omega_sq) {
  return gamma0 + tau0 * omega_sq;
}

/// A frequency-dependent friction coefficient gamma(omega), omega >= 0.
/// Temperature (for the thermal kinds) is frozen at construction so the
/// model is a pure one-argument function, safe to hand to quadratures.
class FrictionModel {
 public:
  static FrictionModel radiative(double gamma0, double tau0);
  static FrictionModel ohmic(double gamma0);
  /// x(omega) = hbar*omega / (2 k_B T) taken from params; T = 0 is the
  /// analytic limit, not an error.
  static FrictionModel white_noise_induced(double gamma0, const EmitterParams& params);
  static FrictionModel sinh_twin(double gamma0, const EmitterParams& params);
  static FrictionModel sech_twin(double gamma0, const EmitterParams& params);
  static FrictionModel phonon(double m, double M, double omega0, double omegaD);
  /// Tabulated gamma(omega): log-linear interpolation between samples,
  /// extrapolation refused.
  static FrictionModel custom(std::vector<double> omegas, std::vector<double> gammas);

  /// Build from a CLI/config name: radiative|ohmic|white|sinh-twin|sech-twin|phonon.
  /// All but phonon take gamma0/tau0/T from params.
  static FrictionModel from_name(const std::string& name, const EmitterParams& params);

  double gamma(double omega) const;
  double gamma0() const { return gamma0_; }
  double tau0() const { return tau0_; }
  FrictionKind kind() const { return kind_; }
  std::string name() const;

  /// Coefficient c2 of the low-frequency expansion
  /// gamma(omega) = gamma0 + c2 omega^2 + O(omega^4).
  /// Defined for Radiative (tau0) and SinhTwin (gamma0 (hbar/2kT)^2 / 6).
  double low_frequency_curvature() const;

 private:
  FrictionModel() = default;
  FrictionKind kind_ = FrictionKind::Ohmic;
  double gamma0_ = 0.0;
  double tau0_ = 0.0;          // Radiative only
  double x_scale_ = 0.0;       // hbar/(2 kT); 0 encodes the T = 0 limit
  std::vector<double> tab_omega_;
  std::vector<double> tab_gamma_;
};

}  // namespace bremit

#endif
