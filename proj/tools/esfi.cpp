// esfi: field-ionization rate constants for hydrogenic atoms.
//
//   esfi constants --units evnm --format csv
//   esfi rate --Z 1 --field 20
//   esfi sweep --F-min 5 --F-max 15 --points 50 --methods ll,jwkb-parabolic --csv out.csv
//   esfi invert --target 1e9 --Z 1
//   esfi barrier --Z 1 --field 0.01 --units au --model jwkb-parabolic

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "esfi/commands.hpp"
#include "esfi/error.hpp"

namespace {

using namespace esfi;

UnitSystem units_or_throw(const std::string& s) {
  auto u = parse_unit_system(s);
  if (!u || *u == UnitSystem::GAUSSIAN)
    throw ValidationError("--units must be one of si, evnm, au (got '" + s + "')");
  return *u;
}

Method method_or_throw(const std::string& s) {
  auto m = parse_method(s);
  if (!m) throw ValidationError("unknown method '" + s + "'");
  return *m;
}

std::optional<double> opt_value(const CLI::Option* opt, double v) {
  return opt->count() > 0 ? std::optional<double>(v) : std::nullopt;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + out_path);
  f << text;
  if (!f) throw std::runtime_error("failed writing " + out_path);
}

GuardPolicy guard_from(bool allow_flag) {
  return allow_flag ? GuardPolicy::Override : cli::guard_policy_from_env();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Electrostatic field ionization rate constants for hydrogenic atoms"};
  app.require_subcommand(1);

  std::string units = "evnm";
  std::string out_path;
  double Z = 1.0;
  double ionization_energy = 0.0;
  double field = 0.0;
  bool allow_extrapolation = false;

  // constants
  auto* constants = app.add_subcommand("constants", "Dump fundamental and defined constants");
  std::string format = "json";
  constants->add_option("--units", units, "si | evnm | au");
  constants->add_option("--format", format, "json | csv");
  constants->add_option("--out", out_path, "Output file (default stdout)");

  // rate
  auto* rate = app.add_subcommand("rate", "Evaluate one rate constant");
  std::string method = "ll";
  rate->add_option("--Z", Z, "Charge number");
  auto* rate_ie = rate->add_option("--ionization-energy", ionization_energy, "Ionization energy override, eV");
  rate->add_option("--field", field, "Field magnitude (V/nm, V/m or au per --units)")->required();
  rate->add_option("--units", units, "si | evnm | au");
  rate->add_option("--method", method,
                   "ll | z-form | gaussian | jwkb-parabolic | jwkb-cartesian | jwkb-naive");
  rate->add_option("--out", out_path, "Output file (default stdout)");
  rate->add_flag("--allow-extrapolation", allow_extrapolation,
                 "Evaluate closed forms above the deep-tunnelling guard");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Tabulate rate constants over a field range");
  cli::SweepSpec sweep_spec;
  std::string spacing = "log";
  std::string methods = "ll";
  std::string csv_path;
  sweep->add_option("--F-min", sweep_spec.F_min, "Lowest field")->required();
  sweep->add_option("--F-max", sweep_spec.F_max, "Highest field")->required();
  sweep->add_option("--points", sweep_spec.points, "Number of fields (>= 2)")->required();
  sweep->add_option("--spacing", spacing, "linear | log");
  sweep->add_option("--methods", methods, "Comma-separated method list");
  sweep->add_option("--Z", Z, "Charge number");
  auto* sweep_ie = sweep->add_option("--ionization-energy", ionization_energy, "Ionization energy override, eV");
  sweep->add_option("--units", units, "si | evnm | au");
  sweep->add_option("--csv,--out", csv_path, "Output CSV file (default stdout)");
  sweep->add_flag("--allow-extrapolation", allow_extrapolation,
                  "Evaluate closed forms above the deep-tunnelling guard");

  // invert
  auto* invert = app.add_subcommand("invert", "Find the field giving a target rate constant");
  InvertSpec invert_spec{};
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  invert->add_option("--target", invert_spec.target, "Target K_e (s^-1, or au per --units)")->required();
  invert->add_option("--Z", Z, "Charge number");
  auto* inv_ie = invert->add_option("--ionization-energy", ionization_energy, "Ionization energy override, eV");
  invert->add_option("--method", method, "Rate method (default ll)");
  auto* inv_lo = invert->add_option("--bracket-lo", bracket_lo, "Lower field bound");
  auto* inv_hi = invert->add_option("--bracket-hi", bracket_hi, "Upper field bound");
  invert->add_option("--units", units, "si | evnm | au");
  invert->add_option("--out", out_path, "Output file (default stdout)");

  // barrier
  auto* barrier = app.add_subcommand("barrier", "Inspect a JWKB barrier");
  std::string model = "jwkb-parabolic";
  barrier->add_option("--Z", Z, "Charge number");
  auto* bar_ie = barrier->add_option("--ionization-energy", ionization_energy, "Ionization energy override, eV");
  barrier->add_option("--field", field, "Field magnitude")->required();
  barrier->add_option("--model", model, "jwkb-parabolic | jwkb-cartesian | jwkb-naive");
  barrier->add_option("--units", units, "si | evnm | au");
  barrier->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitValidation;
  }

  try {
    if (*constants) {
      cli::Format fmt;
      if (format == "json")
        fmt = cli::Format::Json;
      else if (format == "csv")
        fmt = cli::Format::Csv;
      else
        throw ValidationError("--format must be json or csv");
      emit(cli::constants_dump(units_or_throw(units), fmt), out_path);
    } else if (*rate) {
      cli::RateOptions opt{Z, opt_value(rate_ie, ionization_energy), field, units_or_throw(units),
                           method_or_throw(method), guard_from(allow_extrapolation)};
      const auto j = cli::rate_command(opt);
      if (j.at("regime") != "deep")
        std::cerr << "note: result is labelled " << j.at("regime").get<std::string>() << "\n";
      emit(j.dump(2) + "\n", out_path);
    } else if (*sweep) {
      if (spacing == "linear")
        sweep_spec.spacing = cli::Spacing::Linear;
      else if (spacing == "log")
        sweep_spec.spacing = cli::Spacing::Log;
      else
        throw ValidationError("--spacing must be linear or log");
      sweep_spec.methods.clear();
      std::stringstream ss(methods);
      for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) sweep_spec.methods.push_back(method_or_throw(item));
      sweep_spec.Z = Z;
      sweep_spec.ionization_energy = opt_value(sweep_ie, ionization_energy);
      sweep_spec.units = units_or_throw(units);
      sweep_spec.guard = guard_from(allow_extrapolation);
      const auto out = cli::sweep_command(sweep_spec);
      for (const auto& note : out.notes) std::cerr << "note: " << note << "\n";
      emit(out.csv, csv_path);
    } else if (*invert) {
      invert_spec.Z = Z;
      invert_spec.ionization_energy = opt_value(inv_ie, ionization_energy);
      invert_spec.method = method_or_throw(method);
      invert_spec.bracket_lo = opt_value(inv_lo, bracket_lo);
      invert_spec.bracket_hi = opt_value(inv_hi, bracket_hi);
      invert_spec.units = units_or_throw(units);
      emit(cli::invert_command(invert_spec).dump(2) + "\n", out_path);
    } else if (*barrier) {
      const auto shape = parse_motive_shape(model);
      if (!shape) throw ValidationError("unknown model '" + model + "'");
      cli::BarrierOptions opt{Z, opt_value(bar_ie, ionization_energy), field, *shape,
                              units_or_throw(units)};
      emit(cli::barrier_command(opt).dump(2) + "\n", out_path);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return cli::kExitOk;
}
