#include "esfi/commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string_view>

#include "esfi/error.hpp"
#include "esfi/hydrogenic.hpp"
#include "esfi/serialization.hpp"

namespace esfi::cli {

namespace {

void require_field_units(UnitSystem u) {
  if (u == UnitSystem::GAUSSIAN)
    throw ValidationError("--units must be one of si, evnm, au for this command");
}

std::string format_sig(double v, int sig) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.*g", sig, v);
  return buf;
}

std::string format_sci(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9e", v);
  return buf;
}

// Re-express the frequency-valued parts of an eV/V/nm/s result in `units`.
RateResult express(RateResult r, UnitSystem units) {
  if (units == UnitSystem::EVNM || units == r.unit_system) return r;
  const double f = convert(Quantity{1.0, dims::frequency}, units).value;
  r.K_e *= f;
  r.pre_exponential *= f;
  r.log_K_e += std::log(f);
  r.unit_system = units;
  return r;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Validation: return kExitValidation;
    case ErrorKind::Regime: return kExitRegime;
    case ErrorKind::Numeric: return kExitNumeric;
  }
  return 1;
}

GuardPolicy guard_policy_from_env() {
  const char* v = std::getenv("ESFI_GUARD_OVERRIDE");
  return (v != nullptr && std::string_view(v) == "1") ? GuardPolicy::Override : GuardPolicy::Enforce;
}

std::string constants_dump(UnitSystem units, Format format) {
  require_field_units(units);
  const auto& reg = registry();
  if (format == Format::Json) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& c : reg.entries()) {
      if (units == UnitSystem::SI && !c.listed_si) continue;
      if (units == UnitSystem::AU && !c.listed_au) continue;
      const auto v = convert(c.quantity, units);
      out[c.symbol] = {{"value", v.value},
                       {"units", v.units},
                       {"unit_system", units},
                       {"sig_figs", units == UnitSystem::SI ? c.sig_figs_si : c.sig_figs}};
    }
    return out.dump(2) + "\n";
  }
  std::string csv = "symbol,value,units\n";
  for (const auto& c : reg.entries()) {
    if (units == UnitSystem::SI && !c.listed_si) continue;
    if (units == UnitSystem::AU && !c.listed_au) continue;
    const auto v = convert(c.quantity, units);
    const int sig = units == UnitSystem::SI ? c.sig_figs_si : c.sig_figs;
    csv += c.symbol + "," + format_sig(v.value, sig) + "," + v.units + "\n";
  }
  return csv;
}

RateResult evaluate_rate(const RateOptions& opt) {
  require_field_units(opt.units);
  if (!(opt.field > 0.0) || !std::isfinite(opt.field))
    throw NonPositiveField("field must be positive");
  const double F = from_units(opt.field, dims::field, opt.units).value();

  switch (opt.method) {
    case Method::LL:
      return express(rate_ll(make_atom(opt.Z, opt.ionization_energy), F, opt.guard), opt.units);
    case Method::ZForm:
      if (opt.ionization_energy)
        throw ValidationError("--ionization-energy is not accepted by the z-form method");
      return rate_z_form(opt.Z, opt.field, opt.units, opt.guard);
    case Method::Gaussian:
      if (opt.Z != 1.0 || opt.ionization_energy)
        throw ValidationError("the gaussian method is defined for hydrogen (Z = 1) only");
      return express(rate_gaussian_check(F, opt.guard), opt.units);
    case Method::JwkbParabolic:
    case Method::JwkbCartesian:
    case Method::JwkbNaive: {
      const HydrogenicAtom atom = make_atom(opt.Z, opt.ionization_energy);
      const MotiveShape shape = *parse_motive_shape(to_string(opt.method));
      const auto s = rate_jwkb(make_motive_model(shape, atom, F));
      return express(to_rate_result(s, atom), opt.units);
    }
  }
  throw ValidationError("unknown method");
}

nlohmann::json rate_command(const RateOptions& opt) {
  nlohmann::json j = evaluate_rate(opt);
  j["Z"] = opt.Z;
  const HydrogenicAtom atom = make_atom(opt.Z, opt.ionization_energy);
  j["ionization_energy"] = convert(Quantity{atom.I, dims::energy}, opt.units).value;
  j["field"] = opt.field;
  j["field_units"] = unit_label(dims::field, opt.units);
  j["rate_units"] = unit_label(dims::frequency, opt.units);
  return j;
}

SweepOutput sweep_command(const SweepSpec& spec) {
  require_field_units(spec.units);
  if (!(spec.F_min > 0.0)) throw NonPositiveField("field must be positive");
  if (!(spec.F_max > spec.F_min)) throw ValidationError("sweep requires F_min < F_max");
  if (spec.points < 2 || spec.points > 1'000'000)
    throw ValidationError("sweep points must be between 2 and 1000000");
  if (spec.methods.empty()) throw ValidationError("sweep needs at least one method");

  const auto n = static_cast<std::size_t>(spec.points);
  std::vector<double> fields(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    fields[i] = spec.spacing == Spacing::Linear
                    ? spec.F_min + t * (spec.F_max - spec.F_min)
                    : spec.F_min * std::pow(spec.F_max / spec.F_min, t);
  }
  fields.back() = spec.F_max;

  const std::size_t m = spec.methods.size();
  std::vector<double> rates(n * m), exponents(n * m);
  SweepOutput out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      RateOptions opt{spec.Z, spec.ionization_energy, fields[i], spec.units, spec.methods[k], spec.guard};
      try {
        const RateResult r = evaluate_rate(opt);
        rates[i * m + k] = r.K_e;
        exponents[i * m + k] = r.exponent;
      } catch (const Error& e) {
        rates[i * m + k] = std::nan("");
        exponents[i * m + k] = std::nan("");
        out.notes.push_back("F=" + format_sci(fields[i]) + " " + std::string(to_string(spec.methods[k])) +
                            ": " + e.what());
      }
    }
  }

  std::string& csv = out.csv;
  csv = "F";
  for (Method meth : spec.methods) csv += ",K_e_" + std::string(to_string(meth));
  for (Method meth : spec.methods) csv += ",exponent_" + std::string(to_string(meth));
  csv += "\n";
  for (std::size_t i = 0; i < n; ++i) {
    csv += format_sci(fields[i]);
    for (std::size_t k = 0; k < m; ++k) csv += "," + format_sci(rates[i * m + k]);
    for (std::size_t k = 0; k < m; ++k) csv += "," + format_sci(exponents[i * m + k]);
    csv += "\n";
  }
  return out;
}

nlohmann::json barrier_command(const BarrierOptions& opt) {
  require_field_units(opt.units);
  if (!(opt.field > 0.0) || !std::isfinite(opt.field))
    throw NonPositiveField("field must be positive");
  const HydrogenicAtom atom = make_atom(opt.Z, opt.ionization_energy);
  const double F = from_units(opt.field, dims::field, opt.units).value();
  BarrierSolution s;
  try {
    s = rate_jwkb(make_motive_model(opt.model, atom, F));
  } catch (const BarrierSuppressed& e) {
    const double Fs = convert(Quantity{e.suppression_field(), dims::field}, opt.units).value;
    std::ostringstream msg;
    msg.precision(10);
    msg << "barrier suppressed: field " << opt.field << " is at or above the suppression field "
        << Fs << " (" << unit_label(dims::field, opt.units) << ")";
    throw BarrierSuppressed(msg.str(), e.suppression_field());
  }
  s.coord_in = convert(Quantity{s.coord_in, dims::length}, opt.units).value;
  s.coord_out = convert(Quantity{s.coord_out, dims::length}, opt.units).value;
  s.K_e = convert(Quantity{s.K_e, dims::frequency}, opt.units).value;

  nlohmann::json j = s;
  j["Z"] = opt.Z;
  j["field"] = opt.field;
  j["units"] = opt.units;
  j["coord_units"] = unit_label(dims::length, opt.units);
  j["rate_units"] = unit_label(dims::frequency, opt.units);
  return j;
}

nlohmann::json invert_command(const InvertSpec& spec) { return invert_rate(spec); }

}  // namespace esfi::cli
