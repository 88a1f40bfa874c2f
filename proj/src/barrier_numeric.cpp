#include "esfi/barrier_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "esfi/error.hpp"

namespace esfi {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kScanPoints = 600;
// Gauss-Kronrod settings: tighter tolerances only buy round-off driven subdivision.
constexpr unsigned kMaxDepth = 15;
constexpr double kRelTolerance = 1e-13;
// A barrier whose top is within this fraction of I of zero counts as merged.
constexpr double kMergedPeakTolerance = 1e-12;

double motive_unchecked(const MotiveModel& m, double x) {
  const auto& reg = registry();
  const double e = reg.e().value();
  const double sigma2 = reg.sigma().value() * reg.sigma().value();
  const double I = m.atom.I;
  const double B = m.atom.B;
  const double F = m.field;
  switch (m.shape) {
    case MotiveShape::TransformedParabolic:
      return I / 4.0 - e * F * x / 8.0 - B / (4.0 * x) - 1.0 / (4.0 * sigma2 * x * x);
    case MotiveShape::TransformedCartesian:
      // hbar^2 / (8 m_e) == 1 / (4 sigma^2)
      return I - e * F * x - B / (2.0 * x) - 1.0 / (4.0 * sigma2 * x * x);
    case MotiveShape::Naive1D:
      return I - e * F * x - B / x;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

struct ScanRange {
  double lo, hi;
};

ScanRange scan_range(const MotiveModel& m) {
  const double e = registry().e().value();
  return {m.atom.a_Z / 100.0, 10.0 * (2.0 * m.atom.I / (e * m.field))};
}

struct Peak {
  double x;
  double value;
};

// Maximum of the motive, searched in log(x) around the best grid point.
Peak locate_peak(const MotiveModel& m, const std::vector<double>& grid,
                 const std::vector<double>& values) {
  const auto it = std::max_element(values.begin(), values.end());
  const auto i = static_cast<std::size_t>(it - values.begin());
  const double lo = std::log(grid[i == 0 ? 0 : i - 1]);
  const double hi = std::log(grid[std::min(i + 1, grid.size() - 1)]);
  auto neg = [&](double u) { return -motive_unchecked(m, std::exp(u)); };
  const auto [u, fneg] = boost::math::tools::brent_find_minima(
      neg, lo, hi, std::numeric_limits<double>::digits / 2);
  const double x = std::exp(u);
  return {x, -fneg};
}

double polish_root(const MotiveModel& m, double a, double b) {
  auto f = [&](double x) { return motive_unchecked(m, x); };
  const double fa = f(a);
  const double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa < 0.0) == (fb < 0.0)) throw BracketingFailure("turning-point bracket has no sign change");
  boost::uintmax_t max_iter = 200;
  boost::math::tools::eps_tolerance<double> tol(std::numeric_limits<double>::digits - 2);
  const auto [r0, r1] = boost::math::tools::toms748_solve(f, a, b, fa, fb, tol, max_iter);
  if (max_iter >= 200) throw BracketingFailure("turning-point refinement did not converge");
  return 0.5 * (r0 + r1);
}

[[noreturn]] void throw_suppressed(const MotiveModel& m) {
  const double Fs = suppression_field(m.shape, m.atom);
  throw BarrierSuppressed("barrier suppressed: field " + std::to_string(m.field) +
                              " V/nm is at or above the suppression field " +
                              std::to_string(Fs) + " V/nm",
                          Fs);
}

}  // namespace

std::string_view to_string(MotiveShape s) {
  switch (s) {
    case MotiveShape::TransformedParabolic: return "jwkb-parabolic";
    case MotiveShape::TransformedCartesian: return "jwkb-cartesian";
    case MotiveShape::Naive1D: return "jwkb-naive";
  }
  return "?";
}

std::optional<MotiveShape> parse_motive_shape(std::string_view s) {
  for (MotiveShape m : {MotiveShape::TransformedParabolic, MotiveShape::TransformedCartesian,
                        MotiveShape::Naive1D})
    if (to_string(m) == s) return m;
  return std::nullopt;
}

Method method_for(MotiveShape s) {
  switch (s) {
    case MotiveShape::TransformedParabolic: return Method::JwkbParabolic;
    case MotiveShape::TransformedCartesian: return Method::JwkbCartesian;
    case MotiveShape::Naive1D: return Method::JwkbNaive;
  }
  return Method::JwkbNaive;
}

MotiveModel make_motive_model(MotiveShape shape, const HydrogenicAtom& atom, double field) {
  if (!(field > 0.0) || !std::isfinite(field)) throw NonPositiveField("field must be positive");
  return {shape, atom, field};
}

double motive(const MotiveModel& model, double coord) {
  if (!(coord > 0.0)) throw NonPositiveCoordinate("motive coordinate must be positive");
  return motive_unchecked(model, coord);
}

double suppression_field(MotiveShape shape, const HydrogenicAtom& atom) {
  if (shape == MotiveShape::Naive1D) return naive_suppression_field(atom);

  // Peak height is strictly decreasing in F; find where it reaches zero.
  auto peak_height = [&](double F) {
    const MotiveModel m{shape, atom, F};
    const auto [lo, hi] = scan_range(m);
    std::vector<double> grid(kScanPoints), values(kScanPoints);
    const double step = std::log(hi / lo) / static_cast<double>(kScanPoints - 1);
    for (std::size_t i = 0; i < kScanPoints; ++i) {
      grid[i] = lo * std::exp(step * static_cast<double>(i));
      values[i] = motive_unchecked(m, grid[i]);
    }
    return locate_peak(m, grid, values).value;
  };
  const double Fn = naive_suppression_field(atom);
  double a = 0.01 * Fn;
  double b = 10.0 * Fn;
  while (peak_height(b) > 0.0) b *= 2.0;
  boost::uintmax_t max_iter = 200;
  boost::math::tools::eps_tolerance<double> tol(40);
  const auto [r0, r1] = boost::math::tools::toms748_solve(peak_height, a, b, tol, max_iter);
  return 0.5 * (r0 + r1);
}

TurningPoints turning_points(const MotiveModel& model) {
  const auto [lo, hi] = scan_range(model);
  std::vector<double> grid(kScanPoints), values(kScanPoints);
  const double step = std::log(hi / lo) / static_cast<double>(kScanPoints - 1);
  for (std::size_t i = 0; i < kScanPoints; ++i) {
    grid[i] = lo * std::exp(step * static_cast<double>(i));
    values[i] = motive_unchecked(model, grid[i]);
  }

  std::vector<std::size_t> changes;
  for (std::size_t i = 0; i + 1 < kScanPoints; ++i)
    if ((values[i] > 0.0) != (values[i + 1] > 0.0)) changes.push_back(i);

  const double peak_tol = kMergedPeakTolerance * model.atom.I;
  if (changes.size() == 2) {
    const std::size_t i = changes[0];
    const std::size_t j = changes[1];
    return {polish_root(model, grid[i], grid[i + 1]), polish_root(model, grid[j], grid[j + 1])};
  }
  if (!changes.empty()) throw BracketingFailure("motive scan found an unexpected number of zeros");

  // No sign change on the grid: either no barrier, or one narrower than a grid cell.
  const Peak peak = locate_peak(model, grid, values);
  if (!(peak.value > peak_tol)) throw_suppressed(model);
  return {polish_root(model, lo, peak.x), polish_root(model, peak.x, hi)};
}

double barrier_strength(const MotiveModel& model, const TurningPoints& tp) {
  const double sigma = registry().sigma().value();
  const double width = tp.outer - tp.inner;
  auto integrand = [&](double theta) {
    const double s = std::sin(0.5 * theta);
    const double x = tp.inner + width * s * s;
    const double M = motive_unchecked(model, x);
    return M > 0.0 ? std::sqrt(M) * 0.5 * width * std::sin(theta) : 0.0;
  };
  double err = 0.0;
  double l1 = 0.0;
  const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, 0.0, kPi, kMaxDepth, kRelTolerance, &err, &l1);
  const double G = 2.0 * sigma * integral;
  if (!std::isfinite(G) || 2.0 * sigma * err > 1e-8 * std::max(1.0, G))
    throw QuadratureNonConvergence("barrier-strength quadrature did not converge (error estimate " +
                                   std::to_string(2.0 * sigma * err) + ")");
  return G;
}

double barrier_strength(const MotiveModel& model) {
  return barrier_strength(model, turning_points(model));
}

BarrierSolution rate_jwkb(const MotiveModel& model, Prefactor prefactor) {
  if (prefactor == Prefactor::Auto)
    prefactor = model.shape == MotiveShape::Naive1D ? Prefactor::Simple : Prefactor::Transformed;
  if (prefactor == Prefactor::Transformed && model.shape == MotiveShape::Naive1D)
    throw ValidationError("the transformed pre-factor is defined only for the transformed motives");

  const TurningPoints tp = turning_points(model);
  BarrierSolution s{};
  s.coord_in = tp.inner;
  s.coord_out = tp.outer;
  s.shape = model.shape;
  s.G = barrier_strength(model, tp);

  if (prefactor == Prefactor::Transformed) {
    const double eta_in =
        model.shape == MotiveShape::TransformedParabolic ? tp.inner : cartesian_axis_to_parabolic(tp.inner);
    const double u = (2.0 * model.atom.I / model.atom.B) * eta_in;
    s.P_jwkb = u * std::exp(-u);
    s.P_eff = geometric_prefactor() * s.P_jwkb;
  } else {
    s.P_jwkb = 1.0;
    s.P_eff = 1.0;
  }
  s.D_eff = s.P_eff * std::exp(-s.G);
  s.K_e = attempt_frequency_rate(model.atom, s.D_eff);
  s.regime = (model.field < deep_tunnelling_guard(model.atom) && s.D_eff <= 1.0) ? Regime::Deep
                                                                                 : Regime::Shallow;
  return s;
}

RateResult to_rate_result(const BarrierSolution& s, const HydrogenicAtom& atom) {
  RateResult r{};
  r.K_e = s.K_e;
  r.pre_exponential = atom.nu_Z * s.P_eff;
  r.exponent = s.G;
  r.log_K_e = std::log(r.pre_exponential) - r.exponent;
  r.D_eff = s.D_eff;
  r.T = s.D_eff / geometric_prefactor();
  r.method = method_for(s.shape);
  r.unit_system = UnitSystem::EVNM;
  r.regime = s.regime;
  return r;
}

double attempt_frequency_rate(const HydrogenicAtom& atom, double D) { return atom.nu_Z * D; }

}  // namespace esfi
