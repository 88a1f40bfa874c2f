#pragma once

#include <stdexcept>
#include <string>

namespace esfi {

/// Broad failure class; the CLI maps each onto a stable exit code.
enum class ErrorKind {
  Validation,  // bad input, violated precondition (exit 2)
  Regime,      // physically outside the supported tunnelling regime (exit 3)
  Numeric,     // root-finding / quadrature failure (exit 4)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorKind::Validation, what) {}
};

class RegimeError : public Error {
 public:
  explicit RegimeError(const std::string& what)
      : Error(ErrorKind::Regime, what) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what)
      : Error(ErrorKind::Numeric, what) {}
};

// constants_units
struct DimensionMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct UnsupportedGaussianDimension : ValidationError {
  using ValidationError::ValidationError;
};
struct NonFiniteValue : ValidationError {
  using ValidationError::ValidationError;
};

// hydrogenic
struct NonPositiveZ : ValidationError {
  using ValidationError::ValidationError;
};
struct NonPositiveIonizationEnergy : ValidationError {
  using ValidationError::ValidationError;
};
struct NegativeCoordinate : ValidationError {
  using ValidationError::ValidationError;
};

// rate_analytic
struct NonPositiveField : ValidationError {
  using ValidationError::ValidationError;
};
struct ShallowTunnellingRegime : RegimeError {
  using RegimeError::RegimeError;
};

// barrier_numeric
struct NonPositiveCoordinate : ValidationError {
  using ValidationError::ValidationError;
};

/// The two turning points have merged (or become complex) at this field.
class BarrierSuppressed : public RegimeError {
 public:
  BarrierSuppressed(const std::string& what, double suppression_field)
      : RegimeError(what), suppression_field_(suppression_field) {}

  /// Field (V/nm) at which the barrier top touches zero for this model.
  double suppression_field() const noexcept { return suppression_field_; }

 private:
  double suppression_field_;
};

struct BracketingFailure : NumericError {
  using NumericError::NumericError;
};
struct QuadratureNonConvergence : NumericError {
  using NumericError::NumericError;
};

// inversion
struct TargetUnattainable : ValidationError {
  using ValidationError::ValidationError;
};
struct NonMonotoneBracket : NumericError {
  using NumericError::NumericError;
};

}  // namespace esfi
