#ifndef BREMIT_ERRORS_HPP
#define BREMIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bremit {

/// Base class for all library errors. Two broad families map onto the CLI
/// exit codes: input/validation problems (exit 1) and numerical failures
/// (exit 2).
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructor argument or configuration value violates an invariant.
/// The message names the offending field.
class validation_error : public error {
 public:
  using error::error;
};

/// An argument is outside the mathematical domain of the operation.
class domain_error : public error {
 public:
  using error::error;
};

/// The requested quantity is undefined for this model/parameter combination.
class not_applicable_error : public error {
 public:
  using error::error;
};

/// Base for runtime numerical failures (exit code 2 in the CLI).
class numeric_error : public error {
 public:
  using error::error;
};

/// Evaluation hit a genuine singularity (e.g. an undamped resonance).
class singularity_error : public numeric_error {
 public:
  using numeric_error::numeric_error;
};

/// The requested time step violates a stability bound; the message carries
/// a suggested step.
class step_size_error : public numeric_error {
 public:
  step_size_error(const std::string& what, double suggested)
      : numeric_error(what), suggested_dt(suggested) {}
  double suggested_dt;
};

/// The solution left the representable range; `step` is the failing index.
class divergence_error : public numeric_error {
 public:
  divergence_error(const std::string& what, std::size_t at_step)
      : numeric_error(what), step(at_step) {}
  std::size_t step;
};

/// The model's validity condition fails on the requested inputs
/// (e.g. non-positive effective friction or mobility).
class model_validity_error : public numeric_error {
 public:
  using numeric_error::numeric_error;
};

/// Quadrature failed to reach the requested tolerance; carries the
/// tolerance actually achieved.
class quadrature_error : public numeric_error {
 public:
  quadrature_error(const std::string& what, double achieved)
      : numeric_error(what), achieved_rel_tol(achieved) {}
  double achieved_rel_tol;
};

}  // namespace bremit

#endif
