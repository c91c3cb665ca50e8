#include "bremit/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <vector>

#include "bremit/errors.hpp"

namespace bremit {

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-2)) {
    throw validation_error("QuadratureSpec: rel_tol must lie in (0, 1e-2]");
  }
  if (max_evals < 100) {
    throw validation_error("QuadratureSpec: max_evals must be >= 100");
  }
}

namespace {

QuadResult gk_adaptive(const std::function<double(double)>& f, double a, double b,
                       const QuadratureSpec& spec) {
  // Depth chosen so 15 * 2^depth stays within max_evals.
  unsigned depth = 1;
  while ((15u << (depth + 1)) <= spec.max_evals && depth < 20) ++depth;
  double err = 0.0;
  const double value = GK::integrate(f, a, b, depth, spec.rel_tol, &err);
  QuadResult r{value, err};
  const double scale = std::max(std::abs(value), 1e-300);
  if (err / scale > 10.0 * spec.rel_tol) {
    throw quadrature_error("quadrature did not converge to the requested tolerance",
                           err / scale);
  }
  return r;
}

QuadResult trapezoid_log(const std::function<double(double)>& f, double a, double b,
                         const QuadratureSpec& spec) {
  // Composite trapezoid on a log-spaced grid, refined until two consecutive
  // refinements agree to rel_tol. A small linear panel covers [a, eps] when
  // a = 0 (the integrands used here vanish or are finite at 0).
  const double lo = a > 0.0 ? a : b * 1e-12;
  double prev = 0.0;
  double value = 0.0;
  std::size_t n = 64;
  for (int pass = 0; pass < 16; ++pass) {
    if (n > spec.max_evals) break;
    double sum = 0.0;
    const double ratio = std::pow(b / lo, 1.0 / static_cast<double>(n));
    double x0 = lo, f0 = f(x0);
    for (std::size_t i = 1; i <= n; ++i) {
      const double x1 = (i == n) ? b : lo * std::pow(ratio, static_cast<double>(i));
      const double f1 = f(x1);
      sum += 0.5 * (f0 + f1) * (x1 - x0);
      x0 = x1;
      f0 = f1;
    }
    if (a == 0.0) sum += 0.5 * (f(0.0) + f(lo)) * lo;
    prev = value;
    value = sum;
    if (pass > 0 && std::abs(value - prev) <= spec.rel_tol * std::abs(value)) {
      return QuadResult{value, std::abs(value - prev)};
    }
    n *= 2;
  }
  const double achieved = std::abs(value - prev) / std::max(std::abs(value), 1e-300);
  if (achieved > 10.0 * spec.rel_tol) {
    throw quadrature_error("log-grid trapezoid did not converge", achieved);
  }
  return QuadResult{value, std::abs(value - prev)};
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureSpec& spec) {
  spec.validate();
  if (!(b > a)) throw validation_error("integrate: requires b > a");
  return spec.rule == QuadratureRule::AdaptiveGaussKronrod
             ? gk_adaptive(f, a, b, spec)
             : trapezoid_log(f, a, b, spec);
}

QuadResult integrate_oscillatory_cos(const std::function<double(double)>& g,
                                     double a, double b, double t,
                                     const QuadratureSpec& spec) {
  spec.validate();
  if (!(b > a)) throw validation_error("integrate_oscillatory_cos: requires b > a");
  auto fc = [&](double w) { return g(w) * std::cos(w * t); };
  const double period = 2.0 * std::numbers::pi / std::max(t, 1e-300);
  if (b - a < 4.0 * period) {
    return gk_adaptive(fc, a, b, spec);
  }
  // One full oscillation per panel; K15 resolves a single period to near
  // machine accuracy for smooth g. Compensated summation keeps the heavy
  // cancellation between panels under control.
  double sum = 0.0, comp = 0.0, err = 0.0;
  double w = a;
  std::size_t panels = 0;
  while (w < b) {
    const double w1 = std::min(w + period, b);
    double e = 0.0;
    const double v = GK::integrate(fc, w, w1, 2, spec.rel_tol, &e);
    const double y = v - comp;
    const double s2 = sum + y;
    comp = (s2 - sum) - y;
    sum = s2;
    err += e;
    w = w1;
    if (++panels > spec.max_evals) {
      throw quadrature_error("oscillatory quadrature: panel budget exhausted",
                             err / std::max(std::abs(sum), 1e-300));
    }
  }
  return QuadResult{sum, err};
}

QuadResult integrate_one_minus_cos(const std::function<double(double)>& g,
                                   double b, double t, const QuadratureSpec& spec) {
  spec.validate();
  if (!(b > 0.0) || !(t > 0.0)) {
    throw validation_error("integrate_one_minus_cos: requires b > 0 and t > 0");
  }
  const double split = std::min(1.0 / t, b);
  // Below 1/t the factor 1 - cos(wt) ~ (wt)^2/2 is smooth and kills any
  // 1/w behavior of g.
  auto low = [&](double w) {
    const double wt = w * t;
    const double one_minus = wt < 1e-4 ? 0.5 * wt * wt * (1.0 - wt * wt / 12.0)
                                       : 1.0 - std::cos(wt);
    return g(w) * one_minus;
  };
  QuadResult total = gk_adaptive(low, 0.0, split, spec);
  if (split < b) {
    const QuadResult plain = gk_adaptive(g, split, b, spec);
    const QuadResult osc = integrate_oscillatory_cos(g, split, b, t, spec);
    total.value += plain.value - osc.value;
    total.error += plain.error + osc.error;
  }
  return total;
}

}  // namespace bremit
