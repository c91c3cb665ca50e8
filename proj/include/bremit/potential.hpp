#ifndef BREMIT_POTENTIAL_HPP
#define BREMIT_POTENTIAL_HPP

#include <string>
#include <vector>

namespace bremit {

enum class PotentialKind { Free, Harmonic, Polynomial, DoubleWell };

/// 1-D external potential with consistent U, U', U'' evaluators.
class Potential {
 public:
  static Potential free();
  /// U = m omega0^2 x^2 / 2 (stiffness fixed at construction).
  static Potential harmonic(double omega0, double mass);
  /// U = sum_i c_i x^i.
  static Potential polynomial(std::vector<double> coefficients);
  /// U = a x^4 - b x^2, a > 0, b >= 0.
  static Potential double_well(double a, double b);

  /// Parse "harmonic:omega0=...", "poly:c0,c1,...", "doublewell:a,b", "free".
  /// mass is needed by the harmonic form.
  static Potential parse(const std::string& text, double mass);

  double value(double x) const;
  double d1(double x) const;
  double d2(double x) const;

  PotentialKind kind() const { return kind_; }
  bool is_free() const;
  std::string describe() const;

 private:
  Potential() = default;
  PotentialKind kind_ = PotentialKind::Free;
  std::vector<double> coeff_;  // polynomial/double-well coefficients
};

}  // namespace bremit

#endif
