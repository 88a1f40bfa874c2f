#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "esfi/dimension.hpp"

namespace esfi {

/// CODATA-2010 values in SI units. These five numbers are the only inputs;
/// everything else in the registry, including the atomic-unit scales, is
/// derived from them.
namespace codata2010 {
inline constexpr long double electron_volt_J = 1.602176565e-19L;
inline constexpr long double elementary_charge_C = 1.602176565e-19L;
inline constexpr long double electron_mass_kg = 9.10938291e-31L;
inline constexpr long double hbar_Js = 1.054571726e-34L;
inline constexpr long double epsilon0_F_per_m = 8.854187817e-12L;
}  // namespace codata2010

enum class UnitSystem { SI, EVNM, AU, GAUSSIAN };

std::string_view to_string(UnitSystem u);
/// Accepts "si", "evnm", "au", "gaussian" (case-insensitive).
std::optional<UnitSystem> parse_unit_system(std::string_view s);

/// Hartree-system scales expressed in canonical units.
struct AtomicUnitScales {
  long double energy_eV;   // Hartree energy, 2*I_H
  long double voltage_V;   // Hartree energy / e
  long double length_nm;   // Bohr radius
  long double time_s;      // hbar / Hartree energy
};

struct ConstantEntry {
  std::string symbol;
  std::string description;
  Quantity quantity;
  bool listed_si;   // false for the rows that are "not used" in SI practice
  bool listed_au;   // false where the atomic-units column has no entry
  int sig_figs_si;  // printed precision in SI
  int sig_figs;     // printed precision in eV/V/nm and atomic units
};

/// Fundamental and defined constants, held in canonical eV/V/nm/s units.
/// Immutable once built; share freely across threads.
class Registry {
 public:
  Registry();

  // fundamentals
  const Quantity& electron_volt() const { return eV_; }
  const Quantity& e() const { return e_; }
  const Quantity& m_e() const { return m_e_; }
  const Quantity& hbar() const { return hbar_; }
  const Quantity& epsilon_0() const { return eps0_; }
  const Quantity& four_pi_epsilon_0() const { return four_pi_eps0_; }

  // defined constants
  const Quantity& B_H() const { return B_H_; }
  const Quantity& a_0() const { return a_0_; }
  const Quantity& I_H() const { return I_H_; }
  const Quantity& nu_0() const { return nu_0_; }
  const Quantity& omega_0() const { return omega_0_; }
  const Quantity& sigma() const { return sigma_; }
  const Quantity& b() const { return b_; }
  const Quantity& C_FI() const { return C_FI_; }
  const Quantity& pi_hbar_C_FI() const { return pi_hbar_C_FI_; }

  const AtomicUnitScales& atomic_units() const { return au_; }

  /// All constants in dump order.
  const std::vector<ConstantEntry>& entries() const { return entries_; }
  const ConstantEntry* find(std::string_view symbol) const;

 private:
  Quantity eV_, e_, m_e_, hbar_, eps0_, four_pi_eps0_;
  Quantity B_H_, a_0_, I_H_, nu_0_, omega_0_, sigma_, b_, C_FI_, pi_hbar_C_FI_;
  AtomicUnitScales au_;
  std::vector<ConstantEntry> entries_;
};

Registry build_registry();

/// Process-wide registry, built on first use.
const Registry& registry();

/// A number expressed in some unit system, with a printable unit label.
struct Converted {
  double value;
  std::string units;
  UnitSystem system;
};

/// Express q in the target system. AU uses the substitutions
/// e = m_e = hbar = 4*pi*eps0 = 1. GAUSSIAN is defined for charge (statC)
/// and field (statV/cm) only; other dimensions throw
/// UnsupportedGaussianDimension.
Converted convert(const Quantity& q, UnitSystem target);

/// Inverse of convert(): read a number given in `system` as a canonical Quantity.
Quantity from_units(double value, const Dimension& dim, UnitSystem system);

/// Unit label of a dimension in a unit system.
std::string unit_label(const Dimension& dim, UnitSystem system);

/// Electric field unit of the atomic-units system, in V/nm. Derived from the
/// fundamentals (2*I_H / (e*a_0)); the value is not quoted in the source tables.
double atomic_field_unit_v_per_nm();

// Gaussian (unrationalised) field and charge, in statV/cm and statC.
struct GaussianField {
  double statvolt_per_cm;
};
struct GaussianCharge {
  double statcoulomb;
};

/// F = F_s / (4*pi*eps0)^(1/2).
Quantity gaussian_field_to_isq(GaussianField field);
/// e = e_s * (4*pi*eps0)^(1/2).
Quantity gaussian_charge_to_isq(GaussianCharge charge);
GaussianField isq_field_to_gaussian(const Quantity& field);
GaussianCharge isq_charge_to_gaussian(const Quantity& charge);

}  // namespace esfi
