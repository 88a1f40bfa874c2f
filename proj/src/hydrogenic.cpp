#include "esfi/hydrogenic.hpp"

#include <cmath>
#include <numbers>

#include "esfi/constants.hpp"
#include "esfi/error.hpp"

namespace esfi {

HydrogenicAtom make_atom(double Z, std::optional<double> ionization_energy_eV) {
  if (!(Z > 0.0) || !std::isfinite(Z)) throw NonPositiveZ("charge number Z must be positive");
  if (ionization_energy_eV &&
      (!(*ionization_energy_eV > 0.0) || !std::isfinite(*ionization_energy_eV)))
    throw NonPositiveIonizationEnergy("ionization energy must be positive");

  const auto& reg = registry();
  HydrogenicAtom atom{};
  atom.Z = Z;
  atom.I_overridden = ionization_energy_eV.has_value();
  atom.I = ionization_energy_eV.value_or(Z * Z * reg.I_H().value());
  atom.B = Z * reg.B_H().value();
  atom.a_Z = reg.a_0().value() / Z;
  atom.nu_Z = atom.I / (std::numbers::pi * reg.hbar().value());
  atom.omega_Z = 2.0 * std::numbers::pi * atom.nu_Z;
  return atom;
}

Cartesian parabolic_to_cartesian(double eta, double xi, double phi) {
  if (eta < 0.0 || xi < 0.0) throw NegativeCoordinate("parabolic coordinates must be >= 0");
  const double rho = std::sqrt(eta) * std::sqrt(xi);
  return {rho * std::cos(phi), rho * std::sin(phi), 0.5 * (eta - xi)};
}

double cartesian_axis_to_parabolic(double z) {
  if (z < 0.0) throw NegativeCoordinate("on-axis z must be >= 0");
  return 2.0 * z;
}

}  // namespace esfi
