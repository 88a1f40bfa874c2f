#pragma once

#include <optional>
#include <string_view>

#include "esfi/hydrogenic.hpp"
#include "esfi/rate_analytic.hpp"

namespace esfi {

/// Barrier shapes along the field axis.
enum class MotiveShape {
  /// I/4 - eF eta/8 - B/(4 eta) - 1/(4 sigma^2 eta^2), coordinate eta (nm).
  TransformedParabolic,
  /// I - eFz - B/(2z) - hbar^2/(8 m_e z^2), coordinate z (nm); the same
  /// barrier as TransformedParabolic under eta = 2z.
  TransformedCartesian,
  /// I - eFz - B/z, the untransformed one-dimensional barrier.
  Naive1D,
};

std::string_view to_string(MotiveShape s);
/// Accepts "jwkb-parabolic", "jwkb-cartesian", "jwkb-naive".
std::optional<MotiveShape> parse_motive_shape(std::string_view s);
Method method_for(MotiveShape s);

struct MotiveModel {
  MotiveShape shape;
  HydrogenicAtom atom;
  double field;  ///< V/nm
};

/// Throws NonPositiveField.
MotiveModel make_motive_model(MotiveShape shape, const HydrogenicAtom& atom, double field);

/// Motive energy in eV at coordinate `coord` (nm). Throws NonPositiveCoordinate.
double motive(const MotiveModel& model, double coord);

/// Field (V/nm) at which the barrier of this shape vanishes. Closed form for
/// Naive1D, root-found for the transformed shapes.
double suppression_field(MotiveShape shape, const HydrogenicAtom& atom);

struct TurningPoints {
  double inner;  ///< nm
  double outer;  ///< nm
};

/// Both zeros of the motive bracketing the barrier.
///
/// A log-spaced scan over (a_Z/100, 10 * 2I/eF) locates sign changes, which
/// are then polished with TOMS 748. Throws BarrierSuppressed when the
/// barrier top is not above zero, BracketingFailure if the scan cannot
/// isolate two roots.
TurningPoints turning_points(const MotiveModel& model);

/// G = 2 sigma * integral of M^(1/2) between the turning points.
///
/// The integral is taken in theta with coord = in + (out - in) sin^2(theta/2),
/// which removes the square-root endpoint behaviour, using adaptive
/// Gauss-Kronrod. Throws QuadratureNonConvergence.
double barrier_strength(const MotiveModel& model, const TurningPoints& tp);
double barrier_strength(const MotiveModel& model);

enum class Prefactor {
  Auto,         // Transformed for the transformed shapes, Simple for Naive1D
  Transformed,  // P_eff = 2 pi (2I/B) eta_in exp(-(2I/B) eta_in)
  Simple,       // P_t = 1
};

struct BarrierSolution {
  double coord_in;   ///< nm (eta for the parabolic shape, z otherwise)
  double coord_out;  ///< nm
  double G;
  double P_jwkb;
  double P_eff;
  double D_eff;
  double K_e;  ///< s^-1
  MotiveShape shape;
  Regime regime;
};

/// JWKB-form rate with the inner matching point placed at the inner zero:
/// D_eff = P_eff exp(-G), K_e = nu_Z D_eff. The regime is Shallow when the
/// field is at or above deep_tunnelling_guard() or D_eff exceeds 1.
BarrierSolution rate_jwkb(const MotiveModel& model, Prefactor prefactor = Prefactor::Auto);

/// Decomposition compatible with the closed forms: pre_exponential =
/// nu_Z P_eff, exponent = G, T = D_eff / 2 pi.
RateResult to_rate_result(const BarrierSolution& s, const HydrogenicAtom& atom);

/// K_e = nu_Z D. D is not range-checked.
double attempt_frequency_rate(const HydrogenicAtom& atom, double D);

}  // namespace esfi
