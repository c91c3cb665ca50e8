#include "bremit/units.hpp"

#include "bremit/errors.hpp"

namespace bremit {

UnitSystem UnitSystem::si() {
  return UnitSystem(UnitKind::SI, codata2018(), UnitScales{});
}

UnitSystem UnitSystem::natural_electron() {
  const PhysicalConstants si = codata2018();
  UnitScales s;
  s.mass = si.electron_mass;
  s.length = si.hbar / (si.electron_mass * si.c);  // reduced Compton wavelength
  s.time = s.length / si.c;
  s.temperature = si.electron_mass * si.c * si.c / si.k_B;
  return UnitSystem(UnitKind::NaturalElectron, natural_electron_constants(), s);
}

UnitSystem UnitSystem::reduced(const UnitScales& scales) {
  if (!(scales.mass > 0.0 && scales.time > 0.0 && scales.length > 0.0 &&
        scales.temperature > 0.0)) {
    throw validation_error("UnitSystem: reduced scales must all be positive");
  }
  return UnitSystem(UnitKind::Reduced, natural_electron_constants(), scales);
}

std::string UnitSystem::name() const {
  switch (kind_) {
    case UnitKind::SI: return "si";
    case UnitKind::NaturalElectron: return "natural";
    case UnitKind::Reduced: return "reduced";
  }
  return "?";
}

UnitSystem UnitSystem::from_name(const std::string& name) {
  if (name == "si") return si();
  if (name == "natural") return natural_electron();
  if (name == "reduced") return reduced();
  throw validation_error("unknown unit system '" + name + "' (expected si|natural|reduced)");
}

}  // namespace bremit
