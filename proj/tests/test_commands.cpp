#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "esfi/commands.hpp"
#include "esfi/error.hpp"
#include "esfi/serialization.hpp"

using namespace esfi;
using namespace esfi::cli;
using nlohmann::json;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string f; std::getline(in, f, sep);) out.push_back(f);
  return out;
}

}  // namespace

TEST_CASE("constants dump") {
  const auto evnm = lines(constants_dump(UnitSystem::EVNM, Format::Csv));
  CHECK(evnm.front() == "symbol,value,units");
  bool saw_b = false;
  for (const auto& l : evnm) {
    if (l.rfind("b,", 0) == 0) {
      saw_b = true;
      CHECK(l == "b,6.830890,eV^-3/2 V nm^-1");
    }
  }
  CHECK(saw_b);

  const json au = json::parse(constants_dump(UnitSystem::AU, Format::Json));
  CHECK(rel(au.at("C_FI").at("value").get<double>(), 22.627417) < 1e-7);
  CHECK(au.at("C_FI").at("unit_system") == "au");
  CHECK(!au.contains("eV"));

  const json si = json::parse(constants_dump(UnitSystem::SI, Format::Json));
  for (const char* omitted : {"sigma", "b", "C_FI", "I_H", "pi_hbar_C_FI"}) CHECK(!si.contains(omitted));
  CHECK(si.at("m_e").at("units") == "kg");
  CHECK_THROWS_AS(constants_dump(UnitSystem::GAUSSIAN, Format::Json), ValidationError);
}

TEST_CASE("rate command") {
  const json j = rate_command({.field = 10.0});
  CHECK(j.at("method") == "ll");
  CHECK(j.at("regime") == "deep");
  CHECK(j.at("rate_units") == "s^-1");
  CHECK(rel(j.at("K_e").get<double>(), 10999.71949213079) < 1e-12);

  // the same field in three unit systems
  const double F_au = 10.0 / 514.22065268720877;
  const json au = rate_command({.field = F_au, .units = UnitSystem::AU});
  const double t_au = from_units(1.0, dims::time, UnitSystem::AU).value();
  CHECK(rel(au.at("K_e").get<double>() / t_au, 10999.71949213079) < 1e-10);
  CHECK(au.at("rate_units") == "au");
  const json si = rate_command({.field = 1e10, .units = UnitSystem::SI});
  CHECK(rel(si.at("K_e").get<double>(), 10999.71949213079) < 1e-10);

  const json z = rate_command({.field = 0.02, .units = UnitSystem::AU, .method = Method::ZForm});
  CHECK(rel(z.at("K_e").get<double>(), 200.0 * std::exp(-100.0 / 3.0)) < 1e-12);

  CHECK_THROWS_AS(rate_command({.field = -5.0}), NonPositiveField);
  CHECK_THROWS_AS(rate_command({.field = 25.0}), ShallowTunnellingRegime);
  const json x = rate_command({.field = 25.0, .guard = GuardPolicy::Override});
  CHECK(x.at("regime") == "extrapolated");
  CHECK_THROWS_AS(rate_command({.Z = 2.0, .field = 5.0, .method = Method::Gaussian}), ValidationError);
}

TEST_CASE("JWKB rate at 25 V/nm relative to the closed form") {
  // 40-digit reference for the ratio; the point lies above the guard.
  const json p = rate_command({.field = 25.0, .method = Method::JwkbParabolic});
  const json l = rate_command({.field = 25.0, .guard = GuardPolicy::Override});
  CHECK(p.at("regime") == "shallow");
  CHECK(rel(p.at("K_e").get<double>() / l.at("K_e").get<double>(), 1.7025507432701888) < 1e-8);
}

TEST_CASE("sweep") {
  const auto out = sweep_command({.F_min = 5.0, .F_max = 15.0, .points = 3});
  const auto rows = lines(out.csv);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "F,K_e_ll,exponent_ll");
  double prev = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = split(rows[i]);
    const double K = std::stod(f[1]);
    CHECK(K > prev);
    prev = K;
  }
  CHECK(split(rows[2])[0] == "8.660254038e+00");
  CHECK(out.csv.find('\r') == std::string::npos);
  CHECK(out.notes.empty());

  // byte-stable
  CHECK(sweep_command({.F_min = 5.0, .F_max = 15.0, .points = 3}).csv == out.csv);

  const auto multi = sweep_command({.F_min = 1.0, .F_max = 20.0, .points = 5, .spacing = Spacing::Linear,
                                    .methods = {Method::LL, Method::JwkbNaive}});
  const auto mrows = lines(multi.csv);
  CHECK(mrows[0] == "F,K_e_ll,K_e_jwkb-naive,exponent_ll,exponent_jwkb-naive");
  CHECK(split(mrows.back())[1] == "nan");  // 20 V/nm is above the guard
  CHECK(!multi.notes.empty());
  CHECK(split(mrows[2])[0] == "5.750000000e+00");

  CHECK_THROWS_AS(sweep_command({.F_min = 5.0, .F_max = 5.0, .points = 3}), ValidationError);
  CHECK_THROWS_AS(sweep_command({.F_min = 6.0, .F_max = 5.0, .points = 3}), ValidationError);
  CHECK_THROWS_AS(sweep_command({.F_min = 1.0, .F_max = 5.0, .points = 1}), ValidationError);
  CHECK_THROWS_AS(sweep_command({.F_min = -1.0, .F_max = 5.0, .points = 3}), NonPositiveField);
}

TEST_CASE("barrier command") {
  const json j = barrier_command({.field = 1e-3, .units = UnitSystem::AU});
  CHECK(j.at("model") == "jwkb-parabolic");
  CHECK(j.at("coord_units") == "au");
  CHECK(rel(j.at("coord_in").get<double>(), 1.0 + std::sqrt(2.0)) < 1e-2);

  const json c = barrier_command({.field = 1e-3, .model = MotiveShape::TransformedCartesian, .units = UnitSystem::AU});
  CHECK(rel(c.at("G").get<double>(), j.at("G").get<double>()) < 1e-9);

  try {
    barrier_command({.field = 0.0625, .model = MotiveShape::Naive1D, .units = UnitSystem::AU});
    FAIL("expected BarrierSuppressed");
  } catch (const BarrierSuppressed& e) {
    CHECK(exit_code_for(e.kind()) == kExitRegime);
    CHECK(std::string(e.what()).find("0.0625") != std::string::npos);
  }
}

TEST_CASE("invert command") {
  const double K = rate_ll(make_atom(1.0), 11.0).K_e;
  const json j = invert_command({.target = K});
  CHECK(rel(j.at("F").get<double>(), 11.0) < 1e-10);
  CHECK(j.at("units") == "evnm");
  CHECK_THROWS_AS(invert_command({.target = 1e99}), TargetUnattainable);
  CHECK(exit_code_for(ErrorKind::Validation) == kExitValidation);
  CHECK(exit_code_for(ErrorKind::Numeric) == kExitNumeric);
}

TEST_CASE("JSON round trip of result records") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  std::uniform_int_distribution<int> pick(0, 2);
  const Method methods[] = {Method::LL, Method::ZForm, Method::JwkbCartesian};
  const Regime regimes[] = {Regime::Deep, Regime::Shallow, Regime::Extrapolated};
  const UnitSystem systems[] = {UnitSystem::SI, UnitSystem::EVNM, UnitSystem::AU};
  for (int i = 0; i < 200; ++i) {
    const RateResult r{std::exp(u(rng) / 10), u(rng),          std::exp(u(rng) / 10), u(rng), u(rng), u(rng),
                       methods[pick(rng)],    systems[pick(rng)], regimes[pick(rng)]};
    CHECK(json::parse(json(r).dump()).get<RateResult>() == r);

    const BarrierSolution s{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng),
                            static_cast<MotiveShape>(pick(rng)), regimes[pick(rng)]};
    CHECK(json::parse(json(s).dump()).get<BarrierSolution>() == s);

    const InversionResult v{u(rng), pick(rng) * 17, std::abs(u(rng)), methods[pick(rng)], systems[pick(rng)]};
    CHECK(json::parse(json(v).dump()).get<InversionResult>() == v);
  }
  CHECK_THROWS_AS(json::parse(R"("fowler")").get<Method>(), ValidationError);
}

TEST_CASE("guard override from the environment") {
  ::unsetenv("ESFI_GUARD_OVERRIDE");
  CHECK(guard_policy_from_env() == GuardPolicy::Enforce);
  ::setenv("ESFI_GUARD_OVERRIDE", "1", 1);
  CHECK(guard_policy_from_env() == GuardPolicy::Override);
  ::setenv("ESFI_GUARD_OVERRIDE", "0", 1);
  CHECK(guard_policy_from_env() == GuardPolicy::Enforce);
  ::unsetenv("ESFI_GUARD_OVERRIDE");
}
