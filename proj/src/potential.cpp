#include "bremit/potential.hpp"

#include <cmath>
#include <sstream>

#include "bremit/errors.hpp"

namespace bremit {

Potential Potential::free() {
  Potential p;
  p.kind_ = PotentialKind::Free;
  return p;
}

Potential Potential::harmonic(double omega0, double mass) {
  if (!(omega0 > 0.0) || !(mass > 0.0)) {
    throw validation_error("Potential::harmonic: omega0 and mass must be positive");
  }
  Potential p;
  p.kind_ = PotentialKind::Harmonic;
  p.coeff_ = {0.0, 0.0, 0.5 * mass * omega0 * omega0};
  return p;
}

Potential Potential::polynomial(std::vector<double> coefficients) {
  Potential p;
  p.kind_ = PotentialKind::Polynomial;
  p.coeff_ = std::move(coefficients);
  return p;
}

Potential Potential::double_well(double a, double b) {
  if (!(a > 0.0) || !(b >= 0.0)) {
    throw validation_error("Potential::double_well: requires a > 0 and b >= 0");
  }
  Potential p;
  p.kind_ = PotentialKind::DoubleWell;
  p.coeff_ = {0.0, 0.0, -b, 0.0, a};
  return p;
}

double Potential::value(double x) const {
  double v = 0.0;
  for (std::size_t i = coeff_.size(); i-- > 0;) v = v * x + coeff_[i];
  return v;
}

double Potential::d1(double x) const {
  double v = 0.0;
  for (std::size_t i = coeff_.size(); i-- > 1;) {
    v = v * x + coeff_[i] * static_cast<double>(i);
  }
  return v;
}

double Potential::d2(double x) const {
  double v = 0.0;
  for (std::size_t i = coeff_.size(); i-- > 2;) {
    v = v * x + coeff_[i] * static_cast<double>(i * (i - 1));
  }
  return v;
}

bool Potential::is_free() const {
  for (std::size_t i = 1; i < coeff_.size(); ++i) {
    if (coeff_[i] != 0.0) return false;
  }
  return true;
}

std::string Potential::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case PotentialKind::Free: os << "free"; break;
    case PotentialKind::Harmonic: os << "harmonic(k=" << (coeff_.size() > 2 ? 2.0 * coeff_[2] : 0.0) << ")"; break;
    case PotentialKind::Polynomial: {
      os << "poly:";
      for (std::size_t i = 0; i < coeff_.size(); ++i) os << (i ? "," : "") << coeff_[i];
      break;
    }
    case PotentialKind::DoubleWell:
      os << "doublewell(a=" << coeff_[4] << ",b=" << -coeff_[2] << ")";
      break;
  }
  return os.str();
}

Potential Potential::parse(const std::string& text, double mass) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto split_csv = [](const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        out.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw validation_error("Potential::parse: bad number '" + item + "'");
      }
    }
    return out;
  };
  if (head == "free") return free();
  if (head == "harmonic") {
    const auto eq = rest.find('=');
    const std::string val = eq == std::string::npos ? rest : rest.substr(eq + 1);
    if (val.empty()) throw validation_error("Potential::parse: harmonic needs omega0=<value>");
    return harmonic(std::stod(val), mass);
  }
  if (head == "poly") {
    auto c = split_csv(rest);
    if (c.empty()) throw validation_error("Potential::parse: poly needs coefficients");
    return polynomial(std::move(c));
  }
  if (head == "doublewell") {
    auto c = split_csv(rest);
    if (c.size() != 2) throw validation_error("Potential::parse: doublewell needs a,b");
    return double_well(c[0], c[1]);
  }
  throw validation_error("Potential::parse: unknown form '" + head +
                         "' (expected free|harmonic:omega0=..|poly:c0,c1,..|doublewell:a,b)");
}

}  // namespace bremit
