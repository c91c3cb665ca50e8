#include "bremit/spectra.hpp"

#include <cmath>

#include "bremit/errors.hpp"

namespace bremit {

void SpectrumSamples::validate() const {
  if (omegas.size() != values.size() || omegas.size() < 2) {
    throw validation_error("SpectrumSamples: arrays must have equal length >= 2");
  }
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    if (i > 0 && !(omegas[i] > omegas[i - 1])) {
      throw validation_error("SpectrumSamples: omegas must be strictly increasing");
    }
    if (!(omegas[i] >= 0.0)) throw validation_error("SpectrumSamples: omegas must be >= 0");
    if (!std::isfinite(values[i]) || values[i] < 0.0) {
      throw validation_error("SpectrumSamples: values must be finite and >= 0");
    }
  }
}

double quantum_energy_factor(double omega, double T, const PhysicalConstants& consts) {
  if (!(omega >= 0.0)) throw domain_error("quantum_energy_factor: omega must be >= 0");
  if (!(T >= 0.0)) throw domain_error("quantum_energy_factor: T must be >= 0");
  const double hw = consts.hbar * omega;
  if (T == 0.0) return hw;  // coth -> 1 (zero-point); 0 when omega = 0 too
  const double kT2 = 2.0 * consts.k_B * T;
  const double x = hw / kT2;
  // E = 2kT * x * coth(x); series below x ~ 1e-4 avoids 0/0 at omega = 0.
  if (x < 1e-4) return kT2 * (1.0 + x * x / 3.0);
  if (x > 350.0) return hw;  // coth(x) = 1 to double precision
  return hw / std::tanh(x);
}

double energy_factor(const EmitterParams& params, double omega, Statistics stats) {
  if (stats == Statistics::Classical) {
    if (!(omega >= 0.0)) throw domain_error("energy_factor: omega must be >= 0");
    return 2.0 * params.kT();
  }
  return quantum_energy_factor(omega, params.T, params.consts());
}

double s_ff(const FrictionModel& model, double omega, const EmitterParams& params,
            Statistics stats) {
  return params.m * model.gamma(omega) * energy_factor(params, omega, stats);
}

namespace {

double resonance_denominator(const EmitterParams& p, double gamma_w, double omega) {
  const double d = omega * omega - p.omega0 * p.omega0;
  return d * d + omega * omega * gamma_w * gamma_w;
}

}  // namespace

double s_xx(const EmitterParams& params, const FrictionModel& model, double omega,
            Statistics stats) {
  if (!(omega >= 0.0)) throw domain_error("s_xx: omega must be >= 0");
  const double gw = model.gamma(omega);
  const double denom = resonance_denominator(params, gw, omega);
  if (denom == 0.0) {
    throw singularity_error(
        "s_xx: undamped resonance at omega = omega0 (gamma(omega0) = 0); "
        "add damping or evaluate away from the resonance");
  }
  return energy_factor(params, omega, stats) * gw / (params.m * denom);
}

double s_xx_lorentzian(const EmitterParams& params, const FrictionModel& model,
                       double omega, Statistics stats) {
  if (!(omega >= 0.0)) throw domain_error("s_xx_lorentzian: omega must be >= 0");
  if (!(params.omega0 > 0.0)) {
    throw not_applicable_error("s_xx_lorentzian: relaxation approximation undefined for omega0 = 0");
  }
  const double w0 = params.omega0;
  const double g = model.gamma(w0);
  if (!(g > 0.0)) {
    throw singularity_error("s_xx_lorentzian: gamma(omega0) must be positive");
  }
  const double half = 0.5 * g;
  const double d = omega - w0;
  return energy_factor(params, w0, stats) / (2.0 * params.m * w0 * w0) * half /
         (d * d + half * half);
}

double s_vv(const EmitterParams& params, const FrictionModel& model, double omega,
            Statistics stats) {
  if (!(omega >= 0.0)) throw domain_error("s_vv: omega must be >= 0");
  if (params.omega0 == 0.0) {
    // Free particle: omega^2 cancels against the resonance denominator, so
    // this form stays finite down to omega = 0.
    const double gw = model.gamma(omega);
    const double denom = omega * omega + gw * gw;
    if (denom == 0.0) {
      throw singularity_error("s_vv: gamma(0) = 0 for a free particle makes S_VV(0) singular");
    }
    return energy_factor(params, omega, stats) * gw / (params.m * denom);
  }
  return omega * omega * s_xx(params, model, omega, stats);
}

double s_ff_integrated(const EmitterParams& params, double omega, Statistics stats) {
  if (!(params.tau0 > 0.0)) {
    throw domain_error("s_ff_integrated: requires tau0 > 0");
  }
  return params.m / params.tau0 * energy_factor(params, omega, stats);
}

OptimalFriction optimal_friction_svv(double omega, const EmitterParams& params,
                                     Statistics stats) {
  if (!(omega > 0.0)) throw domain_error("optimal_friction_svv: omega must be positive");
  OptimalFriction r;
  r.gamma_opt = omega;
  r.svv_max = energy_factor(params, omega, stats) / (2.0 * params.m * omega);
  return r;
}

std::vector<double> make_omega_grid(double omega_min, double omega_max,
                                    std::size_t points, GridSpacing spacing) {
  if (!(omega_max > omega_min) || points < 2) {
    throw validation_error("make_omega_grid: need omega_max > omega_min and points >= 2");
  }
  if (spacing == GridSpacing::Log && !(omega_min > 0.0)) {
    throw validation_error("make_omega_grid: log spacing requires omega_min > 0");
  }
  std::vector<double> w(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    w[i] = spacing == GridSpacing::Linear
               ? omega_min + t * (omega_max - omega_min)
               : omega_min * std::pow(omega_max / omega_min, t);
  }
  w.back() = omega_max;
  return w;
}

SpectrumSamples evaluate_spectrum(SpectrumKind kind, const EmitterParams& params,
                                  const FrictionModel& model,
                                  const std::vector<double>& omegas,
                                  Statistics stats) {
  SpectrumSamples s;
  s.kind = kind;
  s.params = params;
  s.model = model.name();
  s.omegas = omegas;
  s.values.reserve(omegas.size());
  for (double w : omegas) {
    double v = 0.0;
    switch (kind) {
      case SpectrumKind::XX: v = s_xx(params, model, w, stats); break;
      case SpectrumKind::VV: v = s_vv(params, model, w, stats); break;
      case SpectrumKind::FF: v = s_ff(model, w, params, stats); break;
    }
    s.values.push_back(v);
  }
  s.validate();
  return s;
}

}  // namespace bremit
