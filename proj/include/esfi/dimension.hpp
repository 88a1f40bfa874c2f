#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <string>

namespace esfi {

/// Exact rational exponent. Half-integer exponents are routine here
/// (sigma carries energy^-1/2), so floats are not used for dimensions.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    normalize();
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  constexpr bool is_zero() const { return num_ == 0; }

  friend constexpr Rational operator+(Rational a, Rational b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator-(Rational a) { return {-a.num_, a.den_}; }
  friend constexpr Rational operator-(Rational a, Rational b) { return a + (-b); }
  friend constexpr Rational operator*(Rational a, Rational b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend constexpr bool operator==(Rational a, Rational b) = default;

  std::string str() const;

 private:
  constexpr void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Base dimensions of the canonical eV / V / nm / s system.
enum class BaseDim : std::size_t { Energy = 0, Voltage = 1, Length = 2, Time = 3 };

inline constexpr std::size_t kBaseDimCount = 4;

/// Exponent vector over {energy, voltage, length, time}.
///
/// Charge is energy/voltage and mass is energy*time^2/length^2, so every
/// quantity in the ESFI formulae fits in four slots.
class Dimension {
 public:
  constexpr Dimension() = default;
  constexpr Dimension(Rational energy, Rational voltage, Rational length, Rational time)
      : exp_{energy, voltage, length, time} {}

  constexpr Rational operator[](BaseDim d) const { return exp_[static_cast<std::size_t>(d)]; }
  constexpr bool dimensionless() const {
    for (const auto& e : exp_)
      if (!e.is_zero()) return false;
    return true;
  }

  friend constexpr Dimension operator*(const Dimension& a, const Dimension& b) {
    Dimension r;
    for (std::size_t i = 0; i < kBaseDimCount; ++i) r.exp_[i] = a.exp_[i] + b.exp_[i];
    return r;
  }
  friend constexpr Dimension operator/(const Dimension& a, const Dimension& b) {
    Dimension r;
    for (std::size_t i = 0; i < kBaseDimCount; ++i) r.exp_[i] = a.exp_[i] - b.exp_[i];
    return r;
  }
  constexpr Dimension pow(Rational p) const {
    Dimension r;
    for (std::size_t i = 0; i < kBaseDimCount; ++i) r.exp_[i] = exp_[i] * p;
    return r;
  }
  friend constexpr bool operator==(const Dimension&, const Dimension&) = default;

  /// Unit label built from per-base symbols, e.g. "eV^-3/2 V nm^-1".
  std::string label(const std::array<const char*, kBaseDimCount>& symbols) const;

 private:
  std::array<Rational, kBaseDimCount> exp_{};
};

namespace dims {
inline constexpr Dimension none{};
inline constexpr Dimension energy{1, 0, 0, 0};
inline constexpr Dimension voltage{0, 1, 0, 0};
inline constexpr Dimension length{0, 0, 1, 0};
inline constexpr Dimension time{0, 0, 0, 1};
inline constexpr Dimension frequency{0, 0, 0, -1};
inline constexpr Dimension charge{1, -1, 0, 0};
inline constexpr Dimension mass{1, 0, -2, 2};
inline constexpr Dimension action{1, 0, 0, 1};
inline constexpr Dimension field{0, 1, -1, 0};
inline constexpr Dimension permittivity{1, -2, -1, 0};
}  // namespace dims

/// A value held in canonical eV/V/nm/s units together with its dimension.
class Quantity {
 public:
  Quantity(double value, Dimension dim);

  double value() const { return value_; }
  const Dimension& dim() const { return dim_; }

  friend Quantity operator*(const Quantity& a, const Quantity& b);
  friend Quantity operator/(const Quantity& a, const Quantity& b);
  friend Quantity operator*(double s, const Quantity& q);
  friend Quantity operator*(const Quantity& q, double s);
  friend Quantity operator/(const Quantity& q, double s);
  /// Throws DimensionMismatch unless both sides share a dimension.
  friend Quantity operator+(const Quantity& a, const Quantity& b);
  friend Quantity operator-(const Quantity& a, const Quantity& b);

 private:
  double value_;
  Dimension dim_;
};

Quantity pow(const Quantity& q, Rational p);
Quantity sqrt(const Quantity& q);

}  // namespace esfi
