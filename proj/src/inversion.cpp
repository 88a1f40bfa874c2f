#include "esfi/inversion.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "esfi/barrier_numeric.hpp"
#include "esfi/error.hpp"
#include "esfi/hydrogenic.hpp"

namespace esfi {

namespace {

constexpr int kMaxIterations = 200;
constexpr double kLogTolerance = 1e-12;
// Accepted when ln K_e stalls at round-off before reaching kLogTolerance.
constexpr double kAcceptTolerance = 1e-10;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// ln K_e (s^-1) as a function of field in V/nm.
std::function<double(double)> log_rate(Method method, const HydrogenicAtom& atom) {
  switch (method) {
    case Method::LL:
      return [atom](double F) { return rate_ll(atom, F, GuardPolicy::Override).log_K_e; };
    case Method::ZForm:
      return [Z = atom.Z](double F) {
        return rate_z_form(Z, F, UnitSystem::EVNM, GuardPolicy::Override).log_K_e;
      };
    case Method::Gaussian:
      return [](double F) { return rate_gaussian_check(F, GuardPolicy::Override).log_K_e; };
    case Method::JwkbParabolic:
    case Method::JwkbCartesian:
    case Method::JwkbNaive: {
      const MotiveShape shape = method == Method::JwkbParabolic   ? MotiveShape::TransformedParabolic
                                : method == Method::JwkbCartesian ? MotiveShape::TransformedCartesian
                                                                  : MotiveShape::Naive1D;
      return [shape, atom](double F) {
        const auto s = rate_jwkb(make_motive_model(shape, atom, F));
        return to_rate_result(s, atom).log_K_e;
      };
    }
  }
  throw ValidationError("unknown method");
}

bool closed_form(Method m) {
  return m == Method::LL || m == Method::ZForm || m == Method::Gaussian;
}

}  // namespace

InversionResult invert_rate(const InvertSpec& spec) {
  if (!(spec.target > 0.0) || !std::isfinite(spec.target))
    throw ValidationError("target rate must be positive");
  if ((spec.method == Method::ZForm || spec.method == Method::Gaussian) && spec.ionization_energy)
    throw ValidationError("z-form and gaussian methods take Z only, not an ionization energy");
  if (spec.method == Method::Gaussian && spec.Z != 1.0)
    throw ValidationError("the gaussian method is defined for Z = 1 only");
  if (spec.units == UnitSystem::GAUSSIAN)
    throw ValidationError("inversion accepts si, evnm or au units");

  const HydrogenicAtom atom = make_atom(spec.Z, spec.ionization_energy);
  const double guard = deep_tunnelling_guard(atom);

  auto to_vnm = [&](double f) { return from_units(f, dims::field, spec.units).value(); };
  auto from_vnm = [&](double f) { return convert(Quantity{f, dims::field}, spec.units).value; };

  double lo = spec.bracket_lo ? to_vnm(*spec.bracket_lo)
                              : (closed_form(spec.method) ? to_vnm(1e-6) : 1e-3 * guard);
  double hi = spec.bracket_hi ? to_vnm(*spec.bracket_hi) : guard;
  if (!(lo > 0.0) || !(hi > lo)) throw ValidationError("bracket must satisfy 0 < lo < hi");

  const double log_target =
      std::log(from_units(spec.target, dims::frequency, spec.units).value());
  const auto lnK = log_rate(spec.method, atom);
  auto f = [&](double F) { return lnK(F) - log_target; };

  const double flo = f(lo);
  const double fhi = f(hi);
  if (flo > fhi) throw NonMonotoneBracket("ln K_e is not increasing across the bracket");
  if (flo > 0.0 || fhi < 0.0) {
    std::ostringstream msg;
    msg << "target " << spec.target << " is outside the attainable range ["
        << std::exp(flo + log_target) << ", " << std::exp(fhi + log_target)
        << "] over the field bracket";
    throw TargetUnattainable(msg.str());
  }

  int iterations = 0;
  // Bisection in ln F until the bracket is narrow enough for Newton.
  while (hi / lo > 1.0 + 1e-3 && iterations < kMaxIterations) {
    const double mid = std::sqrt(lo * hi);
    const double fm = f(mid);
    ++iterations;
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if (fm < 0.0)
      lo = mid;
    else
      hi = mid;
  }

  double F = (lo == hi) ? lo : std::sqrt(lo * hi);
  double fF = f(F);
  while (std::abs(fF) > kLogTolerance && hi - lo > 4.0 * kEps * F &&
         iterations < kMaxIterations) {
    ++iterations;
    const double h = 1e-6 * F;
    const double slope = (f(F + h) - f(F - h)) / (2.0 * h);
    double next = F - fF / slope;
    if (!(slope > 0.0) || !(next > lo && next < hi)) next = 0.5 * (lo + hi);
    F = next;
    fF = f(F);
    if (fF < 0.0)
      lo = F;
    else
      hi = F;
  }
  if (std::abs(fF) > kAcceptTolerance)
    throw NumericError("rate inversion did not converge within the iteration limit");

  return {from_vnm(F), iterations, std::abs(std::expm1(fF)), spec.method, spec.units};
}

}  // namespace esfi
