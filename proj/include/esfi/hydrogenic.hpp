#pragma once

#include <optional>

namespace esfi {

/// One-electron atom of nuclear charge Z*e in its ground state.
///
/// All members are in canonical units: eV, eV nm, nm, s^-1. Z need not be
/// an integer. The reduced-mass correction is not applied (m* = m_e).
struct HydrogenicAtom {
  double Z;        ///< charge number
  double I;        ///< ionization energy, eV (Z^2 I_H unless overridden)
  double B;        ///< Coulomb-law constant Z e^2 / 4 pi eps0, eV nm
  double a_Z;      ///< Bohr-type radius a_0 / Z, nm
  double nu_Z;     ///< classical orbital frequency I / (pi hbar), s^-1
  double omega_Z;  ///< 2 pi nu_Z, rad/s
  bool I_overridden;
};

/// Build an atom from its charge number. When `ionization_energy_eV` is
/// given, I is set directly while B and a_Z stay tied to Z, so the
/// I = B^2 sigma^2 / 4 identity no longer holds for such atoms.
///
/// Throws NonPositiveZ, NonPositiveIonizationEnergy.
HydrogenicAtom make_atom(double Z, std::optional<double> ionization_energy_eV = std::nullopt);

struct Cartesian {
  double x, y, z;
};

/// Parabolic (eta, xi, phi) -> Cartesian with z = (eta - xi)/2, the
/// orientation used when the field pulls electrons toward +z.
/// Throws NegativeCoordinate for eta < 0 or xi < 0.
Cartesian parabolic_to_cartesian(double eta, double xi, double phi);

/// On the symmetry axis (xi = 0), eta = 2z. Throws NegativeCoordinate for z < 0.
double cartesian_axis_to_parabolic(double z);

}  // namespace esfi
