#include "esfi/dimension.hpp"

#include <cmath>

#include "esfi/error.hpp"

namespace esfi {

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Dimension::label(const std::array<const char*, kBaseDimCount>& symbols) const {
  std::string out;
  for (std::size_t i = 0; i < kBaseDimCount; ++i) {
    const Rational e = exp_[i];
    if (e.is_zero()) continue;
    if (!out.empty()) out += ' ';
    out += symbols[i];
    if (!(e == Rational{1})) out += "^" + e.str();
  }
  return out.empty() ? "1" : out;
}

Quantity::Quantity(double value, Dimension dim) : value_(value), dim_(dim) {
  if (!std::isfinite(value)) throw NonFiniteValue("quantity value must be finite");
}

Quantity operator*(const Quantity& a, const Quantity& b) {
  return {a.value_ * b.value_, a.dim_ * b.dim_};
}
Quantity operator/(const Quantity& a, const Quantity& b) {
  return {a.value_ / b.value_, a.dim_ / b.dim_};
}
Quantity operator*(double s, const Quantity& q) { return {s * q.value_, q.dim_}; }
Quantity operator*(const Quantity& q, double s) { return {q.value_ * s, q.dim_}; }
Quantity operator/(const Quantity& q, double s) { return {q.value_ / s, q.dim_}; }

Quantity operator+(const Quantity& a, const Quantity& b) {
  if (!(a.dim_ == b.dim_)) throw DimensionMismatch("cannot add quantities of different dimension");
  return {a.value_ + b.value_, a.dim_};
}
Quantity operator-(const Quantity& a, const Quantity& b) {
  if (!(a.dim_ == b.dim_))
    throw DimensionMismatch("cannot subtract quantities of different dimension");
  return {a.value_ - b.value_, a.dim_};
}

Quantity pow(const Quantity& q, Rational p) {
  return {std::pow(q.value(), p.to_double()), q.dim().pow(p)};
}

Quantity sqrt(const Quantity& q) { return {std::sqrt(q.value()), q.dim().pow({1, 2})}; }

}  // namespace esfi
