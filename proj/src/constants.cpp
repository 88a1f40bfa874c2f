#include "esfi/constants.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "esfi/error.hpp"

namespace esfi {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

// Canonical-unit values of every constant, carried in extended precision so
// that AU round trips land within an ulp of the exact AU numbers.
struct Canonical {
  long double eV, e, m_e, hbar, eps0, four_pi_eps0;
  long double B_H, a_0, I_H, nu_0, omega_0, sigma, b, C_FI, pi_hbar_C_FI;
  AtomicUnitScales au;
};

Canonical compute_canonical() {
  using namespace codata2010;
  Canonical c{};
  // J -> eV is 1/eV_J; m -> nm is 1e9; kg = J s^2 m^-2; F/m = C V^-1 m^-1.
  c.eV = 1.0L;
  c.e = elementary_charge_C / electron_volt_J;  // eV/V
  c.m_e = electron_mass_kg / electron_volt_J * 1e-18L;
  c.hbar = hbar_Js / electron_volt_J;
  c.eps0 = epsilon0_F_per_m / electron_volt_J * 1e-9L;
  c.four_pi_eps0 = 4.0L * kPi * c.eps0;

  c.B_H = c.e * c.e / c.four_pi_eps0;
  c.a_0 = c.four_pi_eps0 * c.hbar * c.hbar / (c.e * c.e * c.m_e);
  c.I_H = c.e * c.e / (8.0L * kPi * c.eps0 * c.a_0);
  c.nu_0 = c.I_H / (kPi * c.hbar);
  c.omega_0 = 2.0L * kPi * c.nu_0;
  c.sigma = std::sqrt(2.0L * c.m_e) / c.hbar;
  c.b = (4.0L / 3.0L) * std::sqrt(2.0L * c.m_e) / (c.e * c.hbar);
  c.C_FI = std::pow(2.0L, 4.5L) * std::sqrt(c.m_e) / (c.e * c.hbar * c.hbar);
  c.pi_hbar_C_FI = kPi * c.hbar * c.C_FI;

  c.au.energy_eV = 2.0L * c.I_H;
  c.au.voltage_V = c.au.energy_eV / c.e;
  c.au.length_nm = c.a_0;
  c.au.time_s = c.hbar / c.au.energy_eV;
  return c;
}

const Canonical& canonical() {
  static const Canonical c = compute_canonical();
  return c;
}

long double rpow(long double base, Rational p) {
  if (p.is_zero()) return 1.0L;
  if (p.den() == 1) {
    long double r = 1.0L;
    const auto n = p.num() < 0 ? -p.num() : p.num();
    for (std::int64_t i = 0; i < n; ++i) r *= base;
    return p.num() < 0 ? 1.0L / r : r;
  }
  return std::pow(base, static_cast<long double>(p.num()) / static_cast<long double>(p.den()));
}

// Multiply a canonical value by this to get the value in `system`.
long double factor_from_canonical(const Dimension& d, UnitSystem system) {
  const auto& c = canonical();
  switch (system) {
    case UnitSystem::EVNM:
      return 1.0L;
    case UnitSystem::SI:
      return rpow(codata2010::electron_volt_J, d[BaseDim::Energy]) *
             rpow(1e-9L, d[BaseDim::Length]);
    case UnitSystem::AU:
      return 1.0L / (rpow(c.au.energy_eV, d[BaseDim::Energy]) *
                     rpow(c.au.voltage_V, d[BaseDim::Voltage]) *
                     rpow(c.au.length_nm, d[BaseDim::Length]) *
                     rpow(c.au.time_s, d[BaseDim::Time]));
    case UnitSystem::GAUSSIAN:
      break;
  }
  throw UnsupportedGaussianDimension("no multiplicative Gaussian factor");
}

// statC and statV/cm expressed in SI base combinations.
constexpr long double kStatCoulomb_SI = 3.16227766016837933200e-5L;        // (1e-7 J * 1e-2 m)^(1/2)
constexpr long double kStatVoltPerCm_SI = 0.316227766016837933200L;        // (1e-7 J)^(1/2) (1e-2 m)^(-3/2)

long double four_pi_eps0_si() {
  return 4.0L * kPi * codata2010::epsilon0_F_per_m;
}

// Canonical -> Gaussian multiplier for charge and field.
long double gaussian_factor(const Dimension& d) {
  if (d == dims::charge) {
    // C -> (J m)^(1/2) via 1/sqrt(4 pi eps0), then to statC.
    return factor_from_canonical(d, UnitSystem::SI) / std::sqrt(four_pi_eps0_si()) /
           kStatCoulomb_SI;
  }
  if (d == dims::field) {
    return factor_from_canonical(d, UnitSystem::SI) * std::sqrt(four_pi_eps0_si()) /
           kStatVoltPerCm_SI;
  }
  throw UnsupportedGaussianDimension(
      "Gaussian conversion is defined only for charge and electric field");
}

}  // namespace

std::string_view to_string(UnitSystem u) {
  switch (u) {
    case UnitSystem::SI: return "si";
    case UnitSystem::EVNM: return "evnm";
    case UnitSystem::AU: return "au";
    case UnitSystem::GAUSSIAN: return "gaussian";
  }
  return "?";
}

std::optional<UnitSystem> parse_unit_system(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "si") return UnitSystem::SI;
  if (lower == "evnm") return UnitSystem::EVNM;
  if (lower == "au") return UnitSystem::AU;
  if (lower == "gaussian") return UnitSystem::GAUSSIAN;
  return std::nullopt;
}

Registry::Registry()
    : eV_(static_cast<double>(canonical().eV), dims::energy),
      e_(static_cast<double>(canonical().e), dims::charge),
      m_e_(static_cast<double>(canonical().m_e), dims::mass),
      hbar_(static_cast<double>(canonical().hbar), dims::action),
      eps0_(static_cast<double>(canonical().eps0), dims::permittivity),
      four_pi_eps0_(static_cast<double>(canonical().four_pi_eps0), dims::permittivity),
      B_H_(static_cast<double>(canonical().B_H), dims::energy * dims::length),
      a_0_(static_cast<double>(canonical().a_0), dims::length),
      I_H_(static_cast<double>(canonical().I_H), dims::energy),
      nu_0_(static_cast<double>(canonical().nu_0), dims::frequency),
      omega_0_(static_cast<double>(canonical().omega_0), dims::frequency),
      sigma_(static_cast<double>(canonical().sigma), Dimension{Rational{-1, 2}, 0, -1, 0}),
      b_(static_cast<double>(canonical().b), Dimension{Rational{-3, 2}, 1, -1, 0}),
      C_FI_(static_cast<double>(canonical().C_FI), Dimension{Rational{-5, 2}, 1, -1, -1}),
      pi_hbar_C_FI_(static_cast<double>(canonical().pi_hbar_C_FI),
                    Dimension{Rational{-3, 2}, 1, -1, 0}),
      au_(canonical().au) {
  entries_ = {
      {"eV", "electron volt", eV_, true, false, 8, 7},
      {"e", "elementary charge", e_, true, true, 8, 7},
      {"m_e", "electron mass", m_e_, true, true, 8, 7},
      {"hbar", "reduced Planck constant", hbar_, true, true, 8, 7},
      {"epsilon_0", "electric constant", eps0_, true, true, 8, 7},
      {"4pi_epsilon_0", "4*pi*epsilon_0", four_pi_eps0_, true, true, 8, 7},
      {"B_H", "Coulomb-law constant e^2/(4*pi*epsilon_0)", B_H_, true, true, 8, 7},
      {"a_0", "Bohr radius", a_0_, true, true, 7, 7},
      {"nu_0", "classical orbital frequency of the H ground state", nu_0_, true, true, 7, 7},
      {"omega_0", "classical angular frequency of the H ground state", omega_0_, true, true, 7, 7},
      {"I_H", "hydrogen ground-state ionization energy", I_H_, false, true, 7, 7},
      {"sigma", "Schroedinger-equation constant (2 m_e)^(1/2)/hbar", sigma_, false, true, 7, 7},
      {"b", "second Fowler-Nordheim constant", b_, false, true, 7, 7},
      {"C_FI", "field ionization constant", C_FI_, false, true, 7, 7},
      {"pi_hbar_C_FI", "attempt-frequency-form constant", pi_hbar_C_FI_, false, true, 7, 7},
  };
}

const ConstantEntry* Registry::find(std::string_view symbol) const {
  for (const auto& e : entries_)
    if (e.symbol == symbol) return &e;
  return nullptr;
}

Registry build_registry() { return Registry{}; }

const Registry& registry() {
  static const Registry r = build_registry();
  return r;
}

std::string unit_label(const Dimension& dim, UnitSystem system) {
  switch (system) {
    case UnitSystem::EVNM:
      return dim.label({"eV", "V", "nm", "s"});
    case UnitSystem::SI:
      if (dim == dims::charge) return "C";
      if (dim == dims::mass) return "kg";
      if (dim == dims::action) return "J s";
      if (dim == dims::permittivity) return "F m^-1";
      return dim.label({"J", "V", "m", "s"});
    case UnitSystem::AU:
      return dim.dimensionless() ? "1" : "au";
    case UnitSystem::GAUSSIAN:
      if (dim == dims::charge) return "statC";
      if (dim == dims::field) return "statV cm^-1";
      throw UnsupportedGaussianDimension(
          "Gaussian conversion is defined only for charge and electric field");
  }
  return "?";
}

Converted convert(const Quantity& q, UnitSystem target) {
  const long double f = target == UnitSystem::GAUSSIAN ? gaussian_factor(q.dim())
                                                       : factor_from_canonical(q.dim(), target);
  return {static_cast<double>(static_cast<long double>(q.value()) * f),
          unit_label(q.dim(), target), target};
}

Quantity from_units(double value, const Dimension& dim, UnitSystem system) {
  const long double f = system == UnitSystem::GAUSSIAN ? gaussian_factor(dim)
                                                       : factor_from_canonical(dim, system);
  return {static_cast<double>(static_cast<long double>(value) / f), dim};
}

double atomic_field_unit_v_per_nm() {
  const auto& au = canonical().au;
  return static_cast<double>(au.voltage_V / au.length_nm);
}

Quantity gaussian_field_to_isq(GaussianField field) {
  return from_units(field.statvolt_per_cm, dims::field, UnitSystem::GAUSSIAN);
}

Quantity gaussian_charge_to_isq(GaussianCharge charge) {
  return from_units(charge.statcoulomb, dims::charge, UnitSystem::GAUSSIAN);
}

GaussianField isq_field_to_gaussian(const Quantity& field) {
  if (!(field.dim() == dims::field))
    throw UnsupportedGaussianDimension("expected an electric field quantity");
  return {convert(field, UnitSystem::GAUSSIAN).value};
}

GaussianCharge isq_charge_to_gaussian(const Quantity& charge) {
  if (!(charge.dim() == dims::charge))
    throw UnsupportedGaussianDimension("expected a charge quantity");
  return {convert(charge, UnitSystem::GAUSSIAN).value};
}

}  // namespace esfi
