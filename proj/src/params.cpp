#include "bremit/params.hpp"

#include <cmath>
#include <numbers>

#include "bremit/errors.hpp"

namespace bremit {

double tau0_from_charge(double q, double m, const PhysicalConstants& consts) {
  if (!(m > 0.0)) throw domain_error("tau0_from_charge: mass must be positive");
  if (q == 0.0) throw domain_error("tau0_from_charge: charge must be nonzero");
  return q * q / (6.0 * std::numbers::pi * consts.epsilon0 * m *
                  consts.c * consts.c * consts.c);
}

double cutoff_frequency(double m, const PhysicalConstants& consts) {
  if (!(m > 0.0)) throw domain_error("cutoff_frequency: mass must be positive");
  return 2.0 * m * consts.c * consts.c / consts.hbar;
}

namespace {

void check_field(bool ok, const char* field, const char* what) {
  if (!ok) {
    throw validation_error(std::string("EmitterParams: field '") + field +
                           "' " + what);
  }
}

}  // namespace

EmitterParams make_params(const ParamSpec& spec) {
  EmitterParams p;
  p.units = spec.units;

  p.m = spec.m.value_or(1.0);
  check_field(p.m > 0.0, "m", "must be positive");

  p.gamma0 = spec.gamma0.value_or(0.0);
  check_field(p.gamma0 >= 0.0, "gamma0", "must be non-negative");

  p.omega0 = spec.omega0.value_or(0.0);
  check_field(p.omega0 >= 0.0, "omega0", "must be non-negative");

  p.T = spec.T.value_or(0.0);
  check_field(p.T >= 0.0, "T", "must be non-negative");

  if (spec.tau0) {
    p.tau0 = *spec.tau0;
    check_field(p.tau0 >= 0.0, "tau0", "must be non-negative");
  } else if (spec.charge) {
    p.tau0 = tau0_from_charge(*spec.charge, p.m, p.units.constants());
  } else {
    p.tau0 = 0.0;
  }

  p.cutoff = spec.cutoff ? *spec.cutoff
                         : cutoff_frequency(p.m, p.units.constants());
  check_field(p.cutoff > 0.0, "cutoff", "must be positive");

  if (spec.charge && !spec.cutoff) {
    // Derived-from-charge parameters satisfy Omega*tau0 = 4 alpha / 3.
    const double prod = p.cutoff * p.tau0;
    const double target = 4.0 * p.units.constants().alpha / 3.0;
    check_field(std::abs(prod / target - 1.0) < 1e-9, "cutoff",
                "inconsistent with tau0: Omega*tau0 != 4 alpha / 3");
  }
  return p;
}

EmitterParams natural_electron_vacuum() {
  ParamSpec s;
  s.units = UnitSystem::natural_electron();
  s.m = 1.0;
  s.charge = s.units.constants().elementary_charge;  // sqrt(4 pi alpha)
  s.T = 0.0;
  return make_params(s);
}

EmitterParams convert(const EmitterParams& p, const UnitSystem& to) {
  const UnitScales& a = p.units.scales();
  const UnitScales& b = to.scales();
  const double mass = a.mass / b.mass;
  const double time = a.time / b.time;
  const double temp = a.temperature / b.temperature;

  EmitterParams q;
  q.units = to;
  q.m = p.m * mass;
  q.gamma0 = p.gamma0 / time;
  q.omega0 = p.omega0 / time;
  q.tau0 = p.tau0 * time;
  q.T = p.T * temp;
  q.cutoff = p.cutoff / time;
  return q;
}

}  // namespace bremit
