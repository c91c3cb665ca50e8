#ifndef BREMIT_UNITS_HPP
#define BREMIT_UNITS_HPP

#include <string>

#include "bremit/constants.hpp"

namespace bremit {

enum class UnitKind { SI, NaturalElectron, Reduced };

/// Numeric value of one unit of each base dimension, expressed in SI.
/// Derived dimensions (frequency, velocity, diffusivity, ...) follow from
/// these by convention; no symbolic dimension checking is performed.
struct UnitScales {
  double mass = 1.0;         // kg per unit
  double time = 1.0;         // s per unit
  double length = 1.0;       // m per unit
  double temperature = 1.0;  // K per unit
};

/// A unit system: a tag, the constants expressed in it, and the SI scale
/// of each base dimension (used for round-trip conversions).
class UnitSystem {
 public:
  static UnitSystem si();
  static UnitSystem natural_electron();
  /// Reduced (dimensionless desk units): constants are all 1 except alpha;
  /// scales are user-supplied and must be positive.
  static UnitSystem reduced(const UnitScales& scales = UnitScales{});

  UnitKind kind() const { return kind_; }
  const PhysicalConstants& constants() const { return constants_; }
  const UnitScales& scales() const { return scales_; }
  std::string name() const;

  static UnitSystem from_name(const std::string& name);

 private:
  UnitSystem(UnitKind kind, PhysicalConstants consts, UnitScales scales)
      : kind_(kind), constants_(consts), scales_(scales) {}
  UnitKind kind_;
  PhysicalConstants constants_;
  UnitScales scales_;
};

}  // namespace bremit

#endif
