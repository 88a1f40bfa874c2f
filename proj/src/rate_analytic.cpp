#include "esfi/rate_analytic.hpp"

#include <cmath>
#include <string>

#include "esfi/error.hpp"

namespace esfi {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_field(double field) {
  if (!(field > 0.0) || !std::isfinite(field)) throw NonPositiveField("field must be positive");
}

Regime check_guard(double field, double guard_field, GuardPolicy policy) {
  if (field < guard_field) return Regime::Deep;
  if (policy == GuardPolicy::Override) return Regime::Extrapolated;
  throw ShallowTunnellingRegime("field " + std::to_string(field) +
                                " is at or above the deep-tunnelling guard " +
                                std::to_string(guard_field) +
                                " (set ESFI_GUARD_OVERRIDE=1 to extrapolate)");
}

// Shared closed-form assembly; all inputs already in one consistent system.
RateResult assemble(double C_FI, double b, double I, double B, double e, double nu_Z,
                    double field, Method method, UnitSystem units, Regime regime) {
  RateResult r{};
  r.pre_exponential = C_FI * std::pow(I, 2.5) / field;
  r.exponent = b * std::pow(I, 1.5) / field;
  r.log_K_e = std::log(r.pre_exponential) - r.exponent;
  r.K_e = r.pre_exponential * std::exp(-r.exponent);
  r.D_eff = r.K_e / nu_Z;
  r.T = (2.0 * I / B) * (8.0 * I / (e * field)) * std::exp(-r.exponent);
  r.method = method;
  r.unit_system = units;
  r.regime = regime;
  return r;
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::LL: return "ll";
    case Method::ZForm: return "z-form";
    case Method::Gaussian: return "gaussian";
    case Method::JwkbParabolic: return "jwkb-parabolic";
    case Method::JwkbCartesian: return "jwkb-cartesian";
    case Method::JwkbNaive: return "jwkb-naive";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view s) {
  for (Method m : {Method::LL, Method::ZForm, Method::Gaussian, Method::JwkbParabolic,
                   Method::JwkbCartesian, Method::JwkbNaive})
    if (to_string(m) == s) return m;
  return std::nullopt;
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Deep: return "deep";
    case Regime::Shallow: return "shallow";
    case Regime::Extrapolated: return "extrapolated";
  }
  return "?";
}

std::optional<Regime> parse_regime(std::string_view s) {
  for (Regime r : {Regime::Deep, Regime::Shallow, Regime::Extrapolated})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

double naive_suppression_field(const HydrogenicAtom& atom) {
  const double e = registry().e().value();
  return atom.I * atom.I / (4.0 * e * atom.B);
}

double deep_tunnelling_guard(const HydrogenicAtom& atom) {
  return 0.5 * naive_suppression_field(atom);
}

RateResult rate_ll(const HydrogenicAtom& atom, double field, GuardPolicy guard) {
  require_positive_field(field);
  const Regime regime = check_guard(field, deep_tunnelling_guard(atom), guard);
  const auto& reg = registry();
  return assemble(reg.C_FI().value(), reg.b().value(), atom.I, atom.B, reg.e().value(),
                  atom.nu_Z, field, Method::LL, UnitSystem::EVNM, regime);
}

RateResult rate_z_form(double Z, double field, UnitSystem units, GuardPolicy guard) {
  if (units == UnitSystem::GAUSSIAN)
    throw UnsupportedGaussianDimension("rate_z_form is evaluated in SI, eV/V/nm or atomic units");
  require_positive_field(field);
  const HydrogenicAtom atom = make_atom(Z);
  const auto& reg = registry();

  const double guard_field = convert(Quantity{deep_tunnelling_guard(atom), dims::field}, units).value;
  const Regime regime = check_guard(field, guard_field, guard);

  const double C_FI = convert(reg.C_FI(), units).value;
  const double b = convert(reg.b(), units).value;
  const double I_H = convert(reg.I_H(), units).value;
  const double B_H = convert(reg.B_H(), units).value;
  const double e = convert(reg.e(), units).value;
  const double nu_0 = convert(reg.nu_0(), units).value;

  RateResult r{};
  r.pre_exponential = C_FI * std::pow(Z, 5) * std::pow(I_H, 2.5) / field;
  r.exponent = b * Z * Z * Z * std::pow(I_H, 1.5) / field;
  r.log_K_e = std::log(r.pre_exponential) - r.exponent;
  r.K_e = r.pre_exponential * std::exp(-r.exponent);
  r.D_eff = r.K_e / (Z * Z * nu_0);
  const double I = Z * Z * I_H;
  r.T = (2.0 * I / (Z * B_H)) * (8.0 * I / (e * field)) * std::exp(-r.exponent);
  r.method = Method::ZForm;
  r.unit_system = units;
  r.regime = regime;
  return r;
}

GaussianFormCoefficients gaussian_form_coefficients() {
  const auto& reg = registry();
  const Quantity& m = reg.m_e();
  const Quantity& e = reg.e();
  const Quantity& k = reg.four_pi_epsilon_0();
  const Quantity& h = reg.hbar();
  return {
      4.0 * pow(m, 3) * pow(e, 9) / (pow(k, 5) * pow(h, 7)),
      (2.0 / 3.0) * pow(m, 2) * pow(e, 5) / (pow(k, 3) * pow(h, 4)),
  };
}

RateResult rate_gaussian_check(double field, GuardPolicy guard) {
  require_positive_field(field);
  const HydrogenicAtom atom = make_atom(1.0);
  const Regime regime = check_guard(field, deep_tunnelling_guard(atom), guard);
  const auto coeff = gaussian_form_coefficients();

  RateResult r{};
  r.pre_exponential = coeff.prefactor.value() / field;
  r.exponent = coeff.exponent.value() / field;
  r.log_K_e = std::log(r.pre_exponential) - r.exponent;
  r.K_e = r.pre_exponential * std::exp(-r.exponent);
  r.D_eff = r.K_e / atom.nu_Z;
  r.T = r.K_e / atom.omega_Z;
  r.method = Method::Gaussian;
  r.unit_system = UnitSystem::EVNM;
  r.regime = regime;
  return r;
}

double effective_escape_probability(const HydrogenicAtom& atom, double field, GuardPolicy guard) {
  require_positive_field(field);
  check_guard(field, deep_tunnelling_guard(atom), guard);
  const auto& reg = registry();
  const double I32 = std::pow(atom.I, 1.5);
  return reg.pi_hbar_C_FI().value() * (I32 / field) * std::exp(-reg.b().value() * I32 / field);
}

double barrier_term_T(const HydrogenicAtom& atom, double field, GuardPolicy guard) {
  require_positive_field(field);
  check_guard(field, deep_tunnelling_guard(atom), guard);
  const auto& reg = registry();
  const double e = reg.e().value();
  return (2.0 * atom.I / atom.B) * (8.0 * atom.I / (e * field)) *
         std::exp(-reg.b().value() * std::pow(atom.I, 1.5) / field);
}

bool eta0_in_window(const HydrogenicAtom& atom, double field, double eta0) {
  const double outer = 2.0 * atom.I / (registry().e().value() * field);
  return eta0 >= 5.0 * atom.a_Z && eta0 <= 0.2 * outer;
}

BarrierComponent g1_analytic(const HydrogenicAtom& atom, double field, double eta0) {
  require_positive_field(field);
  const auto& reg = registry();
  const double value = reg.b().value() * std::pow(atom.I, 1.5) / field -
                       reg.sigma().value() * std::sqrt(atom.I) * eta0;
  return {value, eta0_in_window(atom, field, eta0)};
}

BarrierComponent g2_analytic(const HydrogenicAtom& atom, double field, double eta0) {
  require_positive_field(field);
  const double e = registry().e().value();
  const double value = -std::log(8.0 * atom.I / (e * field * eta0));
  return {value, eta0_in_window(atom, field, eta0)};
}

double barrier_term_from_components(const HydrogenicAtom& atom, double field, double eta0) {
  const double g = g1_analytic(atom, field, eta0).value + g2_analytic(atom, field, eta0).value;
  const double inv_radius = 2.0 * atom.I / atom.B;
  return inv_radius * eta0 * std::exp(-inv_radius * eta0) * std::exp(-g);
}

}  // namespace esfi
