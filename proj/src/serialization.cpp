#include "esfi/serialization.hpp"

#include <string>

#include "esfi/error.hpp"

namespace esfi {

namespace {

template <typename Enum, typename Parser>
Enum parse_tag(const nlohmann::json& j, Parser parse, const char* what) {
  const auto tag = j.get<std::string>();
  if (auto v = parse(tag)) return *v;
  throw ValidationError(std::string("unknown ") + what + " tag: " + tag);
}

}  // namespace

void to_json(nlohmann::json& j, UnitSystem u) { j = std::string(to_string(u)); }
void from_json(const nlohmann::json& j, UnitSystem& u) {
  u = parse_tag<UnitSystem>(j, parse_unit_system, "unit system");
}
void to_json(nlohmann::json& j, Method m) { j = std::string(to_string(m)); }
void from_json(const nlohmann::json& j, Method& m) { m = parse_tag<Method>(j, parse_method, "method"); }
void to_json(nlohmann::json& j, Regime r) { j = std::string(to_string(r)); }
void from_json(const nlohmann::json& j, Regime& r) { r = parse_tag<Regime>(j, parse_regime, "regime"); }
void to_json(nlohmann::json& j, MotiveShape s) { j = std::string(to_string(s)); }
void from_json(const nlohmann::json& j, MotiveShape& s) {
  s = parse_tag<MotiveShape>(j, parse_motive_shape, "model");
}

void to_json(nlohmann::json& j, const RateResult& r) {
  j = {{"K_e", r.K_e},           {"log_K_e", r.log_K_e},   {"pre_exponential", r.pre_exponential},
       {"exponent", r.exponent}, {"D_eff", r.D_eff},       {"T", r.T},
       {"method", r.method},     {"unit_system", r.unit_system}, {"regime", r.regime}};
}

void from_json(const nlohmann::json& j, RateResult& r) {
  j.at("K_e").get_to(r.K_e);
  j.at("log_K_e").get_to(r.log_K_e);
  j.at("pre_exponential").get_to(r.pre_exponential);
  j.at("exponent").get_to(r.exponent);
  j.at("D_eff").get_to(r.D_eff);
  j.at("T").get_to(r.T);
  j.at("method").get_to(r.method);
  j.at("unit_system").get_to(r.unit_system);
  j.at("regime").get_to(r.regime);
}

void to_json(nlohmann::json& j, const BarrierSolution& s) {
  j = {{"coord_in", s.coord_in}, {"coord_out", s.coord_out}, {"G", s.G},
       {"P_jwkb", s.P_jwkb},     {"P_eff", s.P_eff},         {"D_eff", s.D_eff},
       {"K_e", s.K_e},           {"model", s.shape},         {"regime", s.regime}};
}

void from_json(const nlohmann::json& j, BarrierSolution& s) {
  j.at("coord_in").get_to(s.coord_in);
  j.at("coord_out").get_to(s.coord_out);
  j.at("G").get_to(s.G);
  j.at("P_jwkb").get_to(s.P_jwkb);
  j.at("P_eff").get_to(s.P_eff);
  j.at("D_eff").get_to(s.D_eff);
  j.at("K_e").get_to(s.K_e);
  j.at("model").get_to(s.shape);
  j.at("regime").get_to(s.regime);
}

void to_json(nlohmann::json& j, const InversionResult& r) {
  j = {{"F", r.field},   {"iterations", r.iterations}, {"residual", r.residual},
       {"method", r.method}, {"units", r.units}};
}

void from_json(const nlohmann::json& j, InversionResult& r) {
  j.at("F").get_to(r.field);
  j.at("iterations").get_to(r.iterations);
  j.at("residual").get_to(r.residual);
  j.at("method").get_to(r.method);
  j.at("units").get_to(r.units);
}

bool operator==(const RateResult& a, const RateResult& b) {
  return a.K_e == b.K_e && a.log_K_e == b.log_K_e && a.pre_exponential == b.pre_exponential &&
         a.exponent == b.exponent && a.D_eff == b.D_eff && a.T == b.T && a.method == b.method &&
         a.unit_system == b.unit_system && a.regime == b.regime;
}

bool operator==(const BarrierSolution& a, const BarrierSolution& b) {
  return a.coord_in == b.coord_in && a.coord_out == b.coord_out && a.G == b.G &&
         a.P_jwkb == b.P_jwkb && a.P_eff == b.P_eff && a.D_eff == b.D_eff && a.K_e == b.K_e &&
         a.shape == b.shape && a.regime == b.regime;
}

bool operator==(const InversionResult& a, const InversionResult& b) {
  return a.field == b.field && a.iterations == b.iterations && a.residual == b.residual &&
         a.method == b.method && a.units == b.units;
}

}  // namespace esfi
