#ifndef BREMIT_CONSTANTS_HPP
#define BREMIT_CONSTANTS_HPP

namespace bremit {

/// Fundamental constants expressed in the active unit system. The SI set is
/// CODATA 2018 (e, h, k_B, c exact by the 2019 redefinition; epsilon0 and
/// alpha measured). The set must be self-consistent:
/// alpha = e^2 / (4 pi epsilon0 hbar c) to 1e-9 relative.
struct PhysicalConstants {
  double hbar;               // reduced Planck constant
  double k_B;                // Boltzmann constant
  double c;                  // speed of light
  double epsilon0;           // vacuum permittivity
  double alpha;              // fine-structure constant (dimensionless)
  double elementary_charge;  // e
  double electron_mass;      // m_e

  /// Throws validation_error if any entry is non-positive or the alpha
  /// consistency relation fails.
  void validate() const;
};

/// CODATA 2018 values in SI units.
PhysicalConstants codata2018();

/// Constants in natural electron units: hbar = m_e = c = k_B = epsilon0 = 1,
/// so e = sqrt(4 pi alpha) and alpha keeps its CODATA value.
PhysicalConstants natural_electron_constants();

}  // namespace bremit

#endif
