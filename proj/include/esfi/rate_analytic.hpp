#pragma once

#include <numbers>
#include <optional>
#include <string_view>

#include "esfi/constants.hpp"
#include "esfi/dimension.hpp"
#include "esfi/hydrogenic.hpp"

namespace esfi {

enum class Method { LL, ZForm, Gaussian, JwkbParabolic, JwkbCartesian, JwkbNaive };

std::string_view to_string(Method m);
/// Accepts "ll", "z-form", "gaussian", "jwkb-parabolic", "jwkb-cartesian", "jwkb-naive".
std::optional<Method> parse_method(std::string_view s);

enum class Regime {
  Deep,          // below the deep-tunnelling guard
  Shallow,       // barrier still present, but above the guard or D_eff > 1
  Extrapolated,  // closed form evaluated above the guard on request
};

std::string_view to_string(Regime r);
std::optional<Regime> parse_regime(std::string_view s);

enum class GuardPolicy { Enforce, Override };

/// Rate constant together with its decomposition.
///
/// K_e = pre_exponential * exp(-exponent) = nu_Z * D_eff = omega_Z * T.
/// log_K_e is carried separately so that rates far below the double range
/// stay usable.
struct RateResult {
  double K_e;
  double log_K_e;
  double pre_exponential;
  double exponent;
  double D_eff;
  double T;
  Method method;
  UnitSystem unit_system;
  Regime regime;
};

/// Field (V/nm) at which the two roots of I - eFz - B/z = 0 merge: I^2/(4eB).
double naive_suppression_field(const HydrogenicAtom& atom);

/// Upper field limit (V/nm) for the closed forms: half the naive suppression field.
double deep_tunnelling_guard(const HydrogenicAtom& atom);

/// K_e = C_FI (I^(5/2)/F) exp(-b I^(3/2)/F), F in V/nm, K_e in s^-1.
///
/// Throws NonPositiveField, or ShallowTunnellingRegime when F is at or above
/// the guard and the policy is Enforce. With GuardPolicy::Override such
/// results are labelled Regime::Extrapolated.
RateResult rate_ll(const HydrogenicAtom& atom, double field, GuardPolicy guard = GuardPolicy::Enforce);

/// Z-explicit form, C_FI Z^5 I_H^(5/2) F^-1 exp(-b Z^3 I_H^(3/2) / F).
///
/// The constants are taken in `units`, so with UnitSystem::AU the field is
/// read in atomic units and K_e is returned per atomic unit of time
/// (C_FI -> 2^(9/2), b -> 2^(5/2)/3, I_H -> 1/2).
RateResult rate_z_form(double Z, double field, UnitSystem units = UnitSystem::EVNM,
                       GuardPolicy guard = GuardPolicy::Enforce);

/// Coefficients of the hydrogen rate written directly in fundamentals:
/// K_e = prefactor/F * exp(-exponent/F).
struct GaussianFormCoefficients {
  Quantity prefactor;  ///< 4 m_e^3 e^9 / ((4 pi eps0)^5 hbar^7), V nm^-1 s^-1
  Quantity exponent;   ///< (2/3) m_e^2 e^5 / ((4 pi eps0)^3 hbar^4), V nm^-1
};

GaussianFormCoefficients gaussian_form_coefficients();

/// Hydrogen (Z = 1) rate from the fundamentals-only form obtained by
/// rewriting the Gaussian-system result with e_s = e/(4 pi eps0)^(1/2) and
/// F_s = (4 pi eps0)^(1/2) F. F in V/nm.
RateResult rate_gaussian_check(double field, GuardPolicy guard = GuardPolicy::Enforce);

/// D_eff = K_e / nu_Z = pi hbar C_FI (I^(3/2)/F) exp(-b I^(3/2)/F).
double effective_escape_probability(const HydrogenicAtom& atom, double field,
                                    GuardPolicy guard = GuardPolicy::Enforce);

/// T = (2I/B)(8I/eF) exp(-b I^(3/2)/F); K_e = omega_Z T.
double barrier_term_T(const HydrogenicAtom& atom, double field,
                      GuardPolicy guard = GuardPolicy::Enforce);

/// P_g = K_e / (T nu_Z).
constexpr double geometric_prefactor() { return 2.0 * std::numbers::pi; }

/// One of the two pieces of the approximated barrier integral, evaluated at
/// an inner matching point eta0 (nm). `in_window` reports whether eta0
/// satisfies 5 a_Z <= eta0 <= 0.2 (2I/eF); outside it the value is still
/// returned.
struct BarrierComponent {
  double value;
  bool in_window;
};

bool eta0_in_window(const HydrogenicAtom& atom, double field, double eta0);

/// g1 = b I^(3/2)/F - sigma I^(1/2) eta0.
BarrierComponent g1_analytic(const HydrogenicAtom& atom, double field, double eta0);

/// g2 = -ln(eta0^-1 * 8I/(eF)).
BarrierComponent g2_analytic(const HydrogenicAtom& atom, double field, double eta0);

/// T rebuilt from (2I/B) eta0 exp(-(2I/B) eta0) exp(-(g1 + g2)). The eta0
/// dependence cancels analytically.
double barrier_term_from_components(const HydrogenicAtom& atom, double field, double eta0);

}  // namespace esfi
