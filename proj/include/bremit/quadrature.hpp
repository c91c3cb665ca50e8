#ifndef BREMIT_QUADRATURE_HPP
#define BREMIT_QUADRATURE_HPP

#include <cstddef>
#include <functional>

namespace bremit {

enum class QuadratureRule { AdaptiveGaussKronrod, TrapezoidLogGrid };

struct QuadratureSpec {
  QuadratureRule rule = QuadratureRule::AdaptiveGaussKronrod;
  double rel_tol = 1e-10;      // in (0, 1e-2]
  std::size_t max_evals = 100000;  // >= 100

  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
};

/// Integrates f over [a, b] per the spec. Throws quadrature_error (with the
/// achieved relative tolerance) if the error estimate misses rel_tol.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureSpec& spec);

/// Integrates g(omega) * (1 - cos(omega t)) over [0, b] for possibly large t:
/// an adaptive pass below omega = 1/t where the factor is smooth, then
/// whole-period panels of Gauss-Kronrod above it. g must be smooth on (0, b]
/// with at worst an integrable 1/omega-type singularity tamed by the
/// (1 - cos) factor.
QuadResult integrate_one_minus_cos(const std::function<double(double)>& g,
                                   double b, double t, const QuadratureSpec& spec);

/// Same panel treatment for g(omega) * cos(omega t) over [a, b].
QuadResult integrate_oscillatory_cos(const std::function<double(double)>& g,
                                     double a, double b, double t,
                                     const QuadratureSpec& spec);

}  // namespace bremit

#endif
