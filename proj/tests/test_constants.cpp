#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "doctest.h"

#include "esfi/constants.hpp"
#include "esfi/error.hpp"
#include "sig_figs.hpp"

using namespace esfi;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

struct Row {
  std::string symbol;
  double value;
  int figs;
};

}  // namespace

TEST_CASE("eV/V/nm values match the reference values") {
  const std::vector<Row> rows{
      {"m_e", 5.685630e-30, 7},      {"hbar", 6.582119e-16, 7},     {"epsilon_0", 5.526350e-2, 7},
      {"4pi_epsilon_0", 0.6944616, 7}, {"B_H", 1.439964, 7},        {"a_0", 5.291772e-2, 7},
      {"nu_0", 6.579684e15, 7},      {"omega_0", 4.134137e16, 7},   {"I_H", 13.60569, 7},
      {"sigma", 5.123167, 7},        {"b", 6.830890, 7},            {"C_FI", 1.245354e17, 7},
      {"pi_hbar_C_FI", 257.5185, 7},
  };
  for (const auto& row : rows) {
    CAPTURE(row.symbol);
    const auto* c = registry().find(row.symbol);
    REQUIRE(c != nullptr);
    CHECK(sig(c->quantity.value(), row.figs) == sig(row.value, row.figs));
  }
  CHECK(registry().e().value() == 1.0);
  CHECK(registry().electron_volt().value() == 1.0);
}

TEST_CASE("SI values match the reference values") {
  const std::vector<Row> rows{
      {"eV", 1.6021766e-19, 8},      {"e", 1.6021766e-19, 8},         {"m_e", 9.1093829e-31, 8},
      {"hbar", 1.0545717e-34, 8},    {"epsilon_0", 8.8541878e-12, 8}, {"4pi_epsilon_0", 1.1126501e-10, 8},
      {"a_0", 5.291772e-11, 7},      {"nu_0", 6.579684e15, 7},        {"omega_0", 4.134137e16, 7},
  };
  for (const auto& row : rows) {
    CAPTURE(row.symbol);
    const auto* c = registry().find(row.symbol);
    REQUIRE(c != nullptr);
    CHECK(sig(convert(c->quantity, UnitSystem::SI).value, row.figs) == sig(row.value, row.figs));
  }
}

TEST_CASE("SI Coulomb-law constant is e^2 / (4 pi eps0) in J m") {
  // Computed directly from the SI fundamentals.
  const double e = 1.602176565e-19;
  const double four_pi_eps0 = 4.0 * std::numbers::pi * 8.854187817e-12;
  const auto v = convert(registry().B_H(), UnitSystem::SI);
  CHECK(rel(v.value, e * e / four_pi_eps0) < 1e-12);
  CHECK(v.units == "J m");
}

TEST_CASE("atomic-units values") {
  const auto& r = registry();
  auto au = [](const Quantity& q) { return convert(q, UnitSystem::AU).value; };
  CHECK(rel(au(r.sigma()), std::sqrt(2.0)) < 1e-12);
  CHECK(rel(au(r.C_FI()), std::pow(2.0, 4.5)) < 1e-12);
  CHECK(rel(au(r.b()), std::pow(2.0, 2.5) / 3.0) < 1e-12);
  CHECK(rel(au(r.pi_hbar_C_FI()), std::pow(2.0, 4.5) * std::numbers::pi) < 1e-12);
  CHECK(rel(au(r.I_H()), 0.5) < 1e-14);
  CHECK(rel(au(r.nu_0()), 0.5 / std::numbers::pi) < 1e-14);
  CHECK(rel(au(r.epsilon_0()), 0.25 / std::numbers::pi) < 1e-14);
  for (const auto* q : {&r.e(), &r.m_e(), &r.hbar(), &r.four_pi_epsilon_0(), &r.B_H(), &r.a_0(),
                        &r.omega_0()})
    CHECK(rel(au(*q), 1.0) < 1e-14);
}

TEST_CASE("atomic field unit") {
  // 2 I_H / (e a_0) from an independent 40-digit evaluation.
  CHECK(rel(atomic_field_unit_v_per_nm(), 514.22065268720877) < 1e-12);
  CHECK(rel(from_units(1.0, dims::field, UnitSystem::AU).value(), 514.22065268720877) < 1e-12);
}

TEST_CASE("round trips through every system") {
  const std::vector<Dimension> dimensions{dims::energy, dims::length,  dims::time,   dims::field,
                                          dims::charge, dims::mass,    dims::action, registry().b().dim(),
                                          registry().C_FI().dim(), dims::permittivity};
  for (UnitSystem u : {UnitSystem::SI, UnitSystem::EVNM, UnitSystem::AU}) {
    for (const auto& d : dimensions) {
      for (double v : {1e-30, 0.37, 1.0, 42.0, 6.02e23}) {
        const Quantity q{v, d};
        const auto c = convert(q, u);
        CHECK(rel(from_units(c.value, d, u).value(), v) < 1e-14);
      }
    }
  }
}

TEST_CASE("unit labels per system") {
  CHECK(unit_label(dims::field, UnitSystem::EVNM) == "V nm^-1");
  CHECK(unit_label(dims::frequency, UnitSystem::EVNM) == "s^-1");
  CHECK(unit_label(dims::charge, UnitSystem::SI) == "C");
  CHECK(unit_label(dims::mass, UnitSystem::SI) == "kg");
  CHECK(unit_label(dims::field, UnitSystem::AU) == "au");
  CHECK(unit_label(dims::none, UnitSystem::AU) == "1");
}

TEST_CASE("unit system tags") {
  CHECK(parse_unit_system("EVNM") == UnitSystem::EVNM);
  CHECK(parse_unit_system("au") == UnitSystem::AU);
  CHECK(!parse_unit_system("cgs"));
  for (UnitSystem u : {UnitSystem::SI, UnitSystem::EVNM, UnitSystem::AU, UnitSystem::GAUSSIAN})
    CHECK(parse_unit_system(to_string(u)) == u);
}

TEST_CASE("Gaussian charge and field") {
  // e in statC is e[C] * 10 c; 1 statV/cm is c * 1e-13 V/nm (c = 299792458 m/s).
  const double c = 299792458.0;
  const auto es = isq_charge_to_gaussian(registry().e());
  CHECK(rel(es.statcoulomb, 4.80320451e-10) < 1e-8);
  CHECK(rel(es.statcoulomb, 1.602176565e-19 * c * 10.0) < 1e-9);
  const Quantity one_statvolt = gaussian_field_to_isq({1.0});
  CHECK(rel(one_statvolt.value(), c * 1e-13) < 1e-9);
  CHECK(rel(gaussian_charge_to_isq(es).value(), 1.0) < 1e-14);
  CHECK(rel(isq_field_to_gaussian(Quantity{10.0, dims::field}).statvolt_per_cm, 10.0 / (c * 1e-13)) < 1e-9);
  CHECK_THROWS_AS(convert(registry().m_e(), UnitSystem::GAUSSIAN), UnsupportedGaussianDimension);
  CHECK_THROWS_AS(isq_field_to_gaussian(registry().e()), UnsupportedGaussianDimension);
}

TEST_CASE("Gaussian-system rate coefficients carry over to ISQ") {
  // 4 m^3 e_s^9 / hbar^7 and (2/3) m^2 e_s^5 / hbar^4 evaluated in CGS,
  // then read as statV/cm quantities and moved to V/nm.
  const double m = 9.10938291e-28;           // g
  const double hbar = 1.054571726e-27;       // erg s
  const double es = 1.602176565e-19 * 299792458.0 * 10.0;  // statC
  const double pre_s = 4.0 * std::pow(m, 3) * std::pow(es, 9) / std::pow(hbar, 7);
  const double exp_s = 2.0 / 3.0 * m * m * std::pow(es, 5) / std::pow(hbar, 4);
  const double to_vnm = 299792458.0 * 1e-13;
  const auto& r = registry();
  const double C_IH = r.C_FI().value() * std::pow(r.I_H().value(), 2.5);
  const double b_IH = r.b().value() * std::pow(r.I_H().value(), 1.5);
  CHECK(rel(pre_s * to_vnm, C_IH) < 1e-8);
  CHECK(rel(exp_s * to_vnm, b_IH) < 1e-8);
}
