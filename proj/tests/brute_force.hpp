#pragma once

#include <cmath>
#include <stdexcept>

// Reference barrier integrals that share nothing with the library numerics:
// roots by plain bisection on the cleared polynomial, the integral by
// composite Simpson in long double after the smoothstep map
// x = in + (out - in)(3t^2 - 2t^3), which turns the square-root endpoints
// into polynomial ones.
namespace brute {

using real = long double;

struct Params {
  real I, B, F, sigma;  // eV, eV nm, V/nm, eV^-1/2 nm^-1
};

// eta^2 M(eta) for the transformed parabolic motive.
inline real cleared(const Params& p, real x) {
  return -p.F * x * x * x / 8 + p.I * x * x / 4 - p.B * x / 4 - 1 / (4 * p.sigma * p.sigma);
}

inline real motive(const Params& p, real x) { return cleared(p, x) / (x * x); }

inline real bisect(const Params& p, real lo, real hi) {
  real flo = cleared(p, lo);
  for (int i = 0; i < 400 && hi - lo > 0; ++i) {
    const real mid = (lo + hi) / 2;
    if (mid == lo || mid == hi) break;
    const real fm = cleared(p, mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

struct Roots {
  real inner, outer;
};

// The cleared cubic is negative at 0, positive near its local maximum and
// negative again at large x; the maximum of M itself sits between the roots.
inline Roots roots(const Params& p) {
  // Stationary points of the cubic: -3F x^2/8 + I x/2 - B/4 = 0.
  const real a = -3 * p.F / 8, b = p.I / 2, c = -p.B / 4;
  const real disc = b * b - 4 * a * c;
  if (disc <= 0) throw std::runtime_error("no barrier");
  const real x_max = (-b - std::sqrt(disc)) / (2 * a);
  if (cleared(p, x_max) <= 0) throw std::runtime_error("no barrier");
  real hi = x_max;
  while (cleared(p, hi) > 0) hi *= 2;
  return {bisect(p, 0, x_max), bisect(p, x_max, hi)};
}

inline real G(const Params& p, long panels = 1'000'000) {
  const Roots r = roots(p);
  const real w = r.outer - r.inner;
  auto f = [&](real t) {
    const real x = r.inner + w * t * t * (3 - 2 * t);
    const real m = motive(p, x);
    return (m > 0 ? std::sqrt(m) : 0) * 6 * w * t * (1 - t);
  };
  const real h = real(1) / panels;
  real sum = f(0) + f(1);
  for (long i = 1; i < panels; ++i) sum += (i % 2 ? 4 : 2) * f(i * h);
  return 2 * p.sigma * sum * h / 3;
}

}  // namespace brute
