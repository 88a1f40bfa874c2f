#pragma once

#include "json.hpp"

#include "esfi/barrier_numeric.hpp"
#include "esfi/inversion.hpp"
#include "esfi/rate_analytic.hpp"

// JSON mapping for result records. Enumerations are written as their
// lower-case tags ("ll", "evnm", "deep", ...).
namespace esfi {

void to_json(nlohmann::json& j, UnitSystem u);
void from_json(const nlohmann::json& j, UnitSystem& u);
void to_json(nlohmann::json& j, Method m);
void from_json(const nlohmann::json& j, Method& m);
void to_json(nlohmann::json& j, Regime r);
void from_json(const nlohmann::json& j, Regime& r);
void to_json(nlohmann::json& j, MotiveShape s);
void from_json(const nlohmann::json& j, MotiveShape& s);

void to_json(nlohmann::json& j, const RateResult& r);
void from_json(const nlohmann::json& j, RateResult& r);
void to_json(nlohmann::json& j, const BarrierSolution& s);
void from_json(const nlohmann::json& j, BarrierSolution& s);
void to_json(nlohmann::json& j, const InversionResult& r);
void from_json(const nlohmann::json& j, InversionResult& r);

bool operator==(const RateResult& a, const RateResult& b);
bool operator==(const BarrierSolution& a, const BarrierSolution& b);
bool operator==(const InversionResult& a, const InversionResult& b);

}  // namespace esfi
