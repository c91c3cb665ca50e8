#include "bremit/constants.hpp"

#include <cmath>
#include <numbers>

#include "bremit/errors.hpp"

namespace bremit {

void PhysicalConstants::validate() const {
  const double entries[] = {hbar, k_B,  c, epsilon0, alpha,
                            elementary_charge, electron_mass};
  for (double v : entries) {
    if (!(v > 0.0)) {
      throw validation_error("PhysicalConstants: all entries must be strictly positive");
    }
  }
  const double alpha_derived =
      elementary_charge * elementary_charge /
      (4.0 * std::numbers::pi * epsilon0 * hbar * c);
  if (std::abs(alpha_derived / alpha - 1.0) > 1e-9) {
    throw validation_error("PhysicalConstants: alpha inconsistent with e^2/(4 pi eps0 hbar c)");
  }
}

PhysicalConstants codata2018() {
  PhysicalConstants k;
  k.hbar = 1.054571817e-34;           // J s  (h/2pi, h exact)
  k.k_B = 1.380649e-23;               // J/K  (exact)
  k.c = 299792458.0;                  // m/s  (exact)
  k.epsilon0 = 8.8541878128e-12;      // F/m
  k.alpha = 7.2973525693e-3;
  k.elementary_charge = 1.602176634e-19;  // C (exact)
  k.electron_mass = 9.1093837015e-31;     // kg
  k.validate();
  return k;
}

PhysicalConstants natural_electron_constants() {
  PhysicalConstants k;
  k.hbar = 1.0;
  k.k_B = 1.0;
  k.c = 1.0;
  k.epsilon0 = 1.0;
  k.alpha = 7.2973525693e-3;
  k.elementary_charge = std::sqrt(4.0 * std::numbers::pi * k.alpha);
  k.electron_mass = 1.0;
  k.validate();
  return k;
}

}  // namespace bremit
