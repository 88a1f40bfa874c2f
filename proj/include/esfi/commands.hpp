#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "esfi/barrier_numeric.hpp"
#include "esfi/constants.hpp"
#include "esfi/error.hpp"
#include "esfi/inversion.hpp"
#include "esfi/rate_analytic.hpp"

// Implementation of the esfi command-line subcommands. The executable in
// tools/ only parses flags and maps exceptions to exit codes.
namespace esfi::cli {

enum class Format { Json, Csv };
enum class Spacing { Linear, Log };

/// Exit codes are part of the CLI contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitRegime = 3;
inline constexpr int kExitNumeric = 4;

int exit_code_for(ErrorKind kind);

/// Override when ESFI_GUARD_OVERRIDE=1 is set in the environment.
GuardPolicy guard_policy_from_env();

/// Every registry constant in the chosen system. Rows with no SI entry
/// (I_H, sigma, b, C_FI, pi_hbar_C_FI) are left out under SI, and eV under AU.
/// JSON: {symbol: {value, units, unit_system, sig_figs}}. CSV: symbol,value,units.
std::string constants_dump(UnitSystem units, Format format);

struct RateOptions {
  double Z = 1.0;
  std::optional<double> ionization_energy;  // eV
  double field = 0.0;                       // in `units`
  UnitSystem units = UnitSystem::EVNM;
  Method method = Method::LL;
  GuardPolicy guard = GuardPolicy::Enforce;
};

/// One rate evaluation with K_e and the pre-exponential expressed in `units`
/// (s^-1, or per atomic time unit for AU).
RateResult evaluate_rate(const RateOptions& opt);

/// RateResult record plus the inputs that produced it.
nlohmann::json rate_command(const RateOptions& opt);

struct SweepSpec {
  double F_min = 0.0;
  double F_max = 0.0;
  int points = 0;
  Spacing spacing = Spacing::Log;
  std::vector<Method> methods{Method::LL};
  double Z = 1.0;
  std::optional<double> ionization_energy;
  UnitSystem units = UnitSystem::EVNM;
  GuardPolicy guard = GuardPolicy::Enforce;
};

struct SweepOutput {
  std::string csv;
  std::vector<std::string> notes;  ///< one line per point that fell back to "nan"
};

/// CSV with columns F, K_e_<method>..., exponent_<method>...; %.9e numbers,
/// LF line endings, "nan" for points a method cannot evaluate.
SweepOutput sweep_command(const SweepSpec& spec);

struct BarrierOptions {
  double Z = 1.0;
  std::optional<double> ionization_energy;
  double field = 0.0;
  MotiveShape model = MotiveShape::TransformedParabolic;
  UnitSystem units = UnitSystem::EVNM;
};

/// {model, coord_in, coord_out, coord_units, G, P_jwkb, P_eff, D_eff, K_e, ...}
nlohmann::json barrier_command(const BarrierOptions& opt);

/// {F, iterations, residual, method, units}
nlohmann::json invert_command(const InvertSpec& spec);

}  // namespace esfi::cli
