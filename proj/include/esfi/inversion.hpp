#pragma once

#include <optional>

#include "esfi/constants.hpp"
#include "esfi/rate_analytic.hpp"

namespace esfi {

struct InvertSpec {
  double target;                         ///< K_e, s^-1 (per atomic time unit when units == AU)
  double Z = 1.0;
  std::optional<double> ionization_energy;  ///< eV
  Method method = Method::LL;
  std::optional<double> bracket_lo;      ///< field, in `units`
  std::optional<double> bracket_hi;
  UnitSystem units = UnitSystem::EVNM;
};

struct InversionResult {
  double field;      ///< in InvertSpec::units
  int iterations;
  double residual;   ///< |K_e(field) - target| / target
  Method method;
  UnitSystem units;
};

/// Field at which the chosen method yields the target rate.
///
/// Works on ln K_e, which is monotone in F on the deep-tunnelling domain:
/// bisection in ln F narrows the bracket, then safeguarded Newton steps
/// finish to a relative rate residual below 1e-12. The default bracket is
/// (1e-6, guard) in field units for the closed forms and (1e-3 guard, guard)
/// for the JWKB methods.
///
/// Throws TargetUnattainable, NonMonotoneBracket, ValidationError.
InversionResult invert_rate(const InvertSpec& spec);

}  // namespace esfi
