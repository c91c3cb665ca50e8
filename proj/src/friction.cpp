#include "bremit/friction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bremit/errors.hpp"

namespace bremit {

double phonon_gamma0(double m, double M, double omega0, double omegaD) {
  if (!(m > 0.0 && M > 0.0 && omega0 > 0.0 && omegaD > 0.0)) {
    throw domain_error("phonon_gamma0: all arguments must be positive");
  }
  if (omega0 > omegaD) {
    throw domain_error("phonon_gamma0: omega0 exceeds the Debye cutoff (outside the phonon band)");
  }
  const double w2 = omega0 * omega0;
  return 3.0 * std::numbers::pi * m * w2 * w2 / (2.0 * M * omegaD * omegaD * omegaD);
}

namespace {

double x_scale_from(const EmitterParams& params) {
  if (params.T == 0.0) return std::numeric_limits<double>::infinity();
  return params.hbar() / (2.0 * params.kT());
}

// tanh(x)/x and sinh(x)/x with stable small-x series.
double tanhc(double x) {
  if (x < 1e-4) return 1.0 - x * x / 3.0;
  return std::tanh(x) / x;
}

double sinhc(double x) {
  if (x < 1e-4) return 1.0 + x * x / 6.0;
  return std::sinh(x) / x;
}

}  // namespace

FrictionModel FrictionModel::radiative(double gamma0, double tau0) {
  if (!(gamma0 >= 0.0) || !(tau0 >= 0.0)) {
    throw validation_error("FrictionModel: gamma0 and tau0 must be non-negative");
  }
  FrictionModel m;
  m.kind_ = FrictionKind::Radiative;
  m.gamma0_ = gamma0;
  m.tau0_ = tau0;
  return m;
}

FrictionModel FrictionModel::ohmic(double gamma0) {
  if (!(gamma0 >= 0.0)) throw validation_error("FrictionModel: gamma0 must be non-negative");
  FrictionModel m;
  m.kind_ = FrictionKind::Ohmic;
  m.gamma0_ = gamma0;
  return m;
}

FrictionModel FrictionModel::white_noise_induced(double gamma0, const EmitterParams& params) {
  if (!(gamma0 >= 0.0)) throw validation_error("FrictionModel: gamma0 must be non-negative");
  FrictionModel m;
  m.kind_ = FrictionKind::WhiteNoiseInduced;
  m.gamma0_ = gamma0;
  m.x_scale_ = x_scale_from(params);
  return m;
}

FrictionModel FrictionModel::sinh_twin(double gamma0, const EmitterParams& params) {
  if (!(gamma0 >= 0.0)) throw validation_error("FrictionModel: gamma0 must be non-negative");
  if (params.T == 0.0) {
    throw domain_error("FrictionModel: SinhTwin requires T > 0 (gamma diverges for omega > 0 at T = 0)");
  }
  FrictionModel m;
  m.kind_ = FrictionKind::SinhTwin;
  m.gamma0_ = gamma0;
  m.x_scale_ = x_scale_from(params);
  return m;
}

FrictionModel FrictionModel::sech_twin(double gamma0, const EmitterParams& params) {
  if (!(gamma0 >= 0.0)) throw validation_error("FrictionModel: gamma0 must be non-negative");
  FrictionModel m;
  m.kind_ = FrictionKind::SechTwin;
  m.gamma0_ = gamma0;
  m.x_scale_ = x_scale_from(params);
  return m;
}

FrictionModel FrictionModel::phonon(double m, double M, double omega0, double omegaD) {
  FrictionModel f;
  f.kind_ = FrictionKind::PhononPreset;
  f.gamma0_ = phonon_gamma0(m, M, omega0, omegaD);
  return f;
}

FrictionModel FrictionModel::custom(std::vector<double> omegas, std::vector<double> gammas) {
  if (omegas.size() != gammas.size() || omegas.size() < 2) {
    throw validation_error("FrictionModel: custom table needs >= 2 matching samples");
  }
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    if (!(gammas[i] > 0.0)) throw validation_error("FrictionModel: custom gamma values must be positive");
    if (i > 0 && !(omegas[i] > omegas[i - 1])) {
      throw validation_error("FrictionModel: custom omegas must be strictly increasing");
    }
  }
  if (!(omegas.front() >= 0.0)) throw validation_error("FrictionModel: custom omegas must be >= 0");
  FrictionModel m;
  m.kind_ = FrictionKind::Custom;
  m.gamma0_ = gammas.front();
  m.tab_omega_ = std::move(omegas);
  m.tab_gamma_ = std::move(gammas);
  return m;
}

FrictionModel FrictionModel::from_name(const std::string& name, const EmitterParams& p) {
  if (name == "radiative") return radiative(p.gamma0, p.tau0);
  if (name == "ohmic") return ohmic(p.gamma0);
  if (name == "white") return white_noise_induced(p.gamma0, p);
  if (name == "sinh-twin") return sinh_twin(p.gamma0, p);
  if (name == "sech-twin") return sech_twin(p.gamma0, p);
  throw validation_error("unknown friction model '" + name +
                         "' (expected radiative|ohmic|white|sinh-twin|sech-twin|phonon)");
}

double FrictionModel::gamma(double omega) const {
  if (!(omega >= 0.0)) throw domain_error("FrictionModel::gamma: omega must be >= 0");
  switch (kind_) {
    case FrictionKind::Radiative:
      return gamma_effective(gamma0_, tau0_, omega * omega);
    case FrictionKind::Ohmic:
    case FrictionKind::PhononPreset:
      return gamma0_;
    case FrictionKind::WhiteNoiseInduced: {
      if (omega == 0.0) return gamma0_;
      if (std::isinf(x_scale_)) return 0.0;  // T = 0 limit
      return gamma0_ * tanhc(x_scale_ * omega);
    }
    case FrictionKind::SinhTwin:
      if (omega == 0.0) return gamma0_;
      return gamma0_ * sinhc(x_scale_ * omega);
    case FrictionKind::SechTwin: {
      if (omega == 0.0) return gamma0_;
      if (std::isinf(x_scale_)) return 0.0;  // T = 0 limit
      const double x = x_scale_ * omega;
      return x > 700.0 ? 0.0 : gamma0_ / std::cosh(x);
    }
    case FrictionKind::Custom: {
      if (omega < tab_omega_.front() || omega > tab_omega_.back()) {
        throw domain_error("FrictionModel: custom table does not cover omega (extrapolation refused)");
      }
      auto it = std::upper_bound(tab_omega_.begin(), tab_omega_.end(), omega);
      if (it == tab_omega_.end()) return tab_gamma_.back();
      const std::size_t j = static_cast<std::size_t>(it - tab_omega_.begin());
      if (j == 0) return tab_gamma_.front();
      const double w0 = tab_omega_[j - 1], w1 = tab_omega_[j];
      const double t = (omega - w0) / (w1 - w0);
      return tab_gamma_[j - 1] * std::pow(tab_gamma_[j] / tab_gamma_[j - 1], t);
    }
  }
  throw error("FrictionModel: unreachable kind");
}

std::string FrictionModel::name() const {
  switch (kind_) {
    case FrictionKind::Radiative: return "radiative";
    case FrictionKind::Ohmic: return "ohmic";
    case FrictionKind::WhiteNoiseInduced: return "white";
    case FrictionKind::SinhTwin: return "sinh-twin";
    case FrictionKind::SechTwin: return "sech-twin";
    case FrictionKind::PhononPreset: return "phonon";
    case FrictionKind::Custom: return "custom";
  }
  return "?";
}

double FrictionModel::low_frequency_curvature() const {
  switch (kind_) {
    case FrictionKind::Radiative:
      return tau0_;
    case FrictionKind::SinhTwin:
      return gamma0_ * x_scale_ * x_scale_ / 6.0;
    default:
      throw not_applicable_error(
          "low_frequency_curvature: defined only for radiative and sinh-twin models");
  }
}

}  // namespace bremit
